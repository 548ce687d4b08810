//! Prints the number of isomorphism classes of linear hypergraphs (ranks ≥ 2)
//! on exactly `n` vertices, and the largest chromatic index among them.

use std::time::Instant;

use hypercolor::coloring::{exact_chromatic_index, DEFAULT_BUDGET};
use hypercolor::enumeration::{enumerate, EnumSpec};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    for n in 2..=max_n {
        let start = Instant::now();
        let mut classes = 0;
        let mut max_q = 0;
        for h in enumerate(&EnumSpec::new(n)).expect("valid spec") {
            classes += 1;
            let q = exact_chromatic_index(&h, DEFAULT_BUDGET)
                .expect("small instance")
                .q;
            max_q = max_q.max(q);
        }
        println!(
            "n={n} classes={classes} max_q={max_q} ({:.2?})",
            start.elapsed()
        );
    }
}
