//! Acceptance criteria, one PASS/FAIL line each. Every tolerance is exact
//! (integer equality or zero failures); runtime limits are wall-clock.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_chromatic_index, brute_class_count, brute_triangles};
use hypercolor::conjectures::{
    brooks_check, color_by_rank_induction, critical_check, verify_conjecture, BrooksException,
    ConjectureId, Status,
};
use hypercolor::constructions::{plane_with_copies, projective_plane, ConstructionSpec};
use hypercolor::enumeration::{enumerate, EnumSpec};
use hypercolor::random::random_hypergraph;
use hypercolor::{
    count_triangles, exact_chromatic_index, stats, validate_coloring, Hypergraph, DEFAULT_BUDGET,
};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Linear classes with `2 <= n <= 5` and every rank at least 2.
fn corpus() -> Vec<Hypergraph> {
    (2..=5)
        .flat_map(|n| enumerate(&EnumSpec::new(n)).unwrap())
        .collect()
}

fn fano_certification() -> Outcome {
    let ConstructionSpec::ProjectivePlane { order } = "plane:2".parse().unwrap() else {
        return outcome(false, "plane:2 did not parse as a plane");
    };
    let h = projective_plane(order).unwrap();
    let q = exact_chromatic_index(&h, DEFAULT_BUDGET).unwrap().q;
    let s = stats(&h);
    let r_all_six = s.clique_ranks.iter().all(|&r| r == 6);
    let c5 = verify_conjecture(&h, ConjectureId::C5, DEFAULT_BUDGET);
    let ok = q == 7
        && s.max_clique_degree == 6
        && r_all_six
        && c5.status == Status::ExceptionCasePass
        && c5.q == Some(s.max_clique_degree + 1);
    outcome(
        ok,
        format!(
            "q={q} D={} R(e)=6 on all edges: {r_all_six}, C5 {:?}",
            s.max_clique_degree, c5.status
        ),
    )
}

fn bound_over_corpus(corpus: &[Hypergraph], id: ConjectureId) -> Outcome {
    let mut violations = 0;
    let mut other = 0;
    for h in corpus {
        match verify_conjecture(h, id, DEFAULT_BUDGET).status {
            Status::Pass => {}
            Status::Violation => violations += 1,
            _ => other += 1,
        }
    }
    outcome(
        violations == 0 && other == 0,
        format!(
            "{} classes, {violations} violations, {other} not passing otherwise",
            corpus.len()
        ),
    )
}

fn clique_rank_bound(corpus: &[Hypergraph]) -> Outcome {
    let mut anomalies = 0;
    let mut tight = 0;
    for h in corpus {
        let b = brooks_check(h, DEFAULT_BUDGET);
        let Some(q) = b.q else {
            anomalies += 1;
            continue;
        };
        if q > b.r_max + 1 {
            anomalies += 1;
        }
        if q == b.r_max + 1 {
            tight += 1;
            if b.exception == BrooksException::None {
                anomalies += 1;
            }
        }
    }
    outcome(
        anomalies == 0,
        format!(
            "{} classes, {tight} at R+1, {anomalies} anomalies",
            corpus.len()
        ),
    )
}

fn rank_induction(corpus: &[Hypergraph]) -> Outcome {
    let mut applicable = 0;
    let mut failures = 0;
    for h in corpus {
        let out = color_by_rank_induction(h, DEFAULT_BUDGET).unwrap();
        if !out.hypothesis_holds {
            continue;
        }
        applicable += 1;
        let good = out.coloring.is_some_and(|c| {
            validate_coloring(h, &c).unwrap() && c.colors.iter().all(|&x| x < h.n())
        });
        if !good {
            failures += 1;
        }
    }
    outcome(
        failures == 0 && applicable > 0,
        format!("{applicable} instances meet the hypothesis, {failures} failures"),
    )
}

fn plane_copies() -> Outcome {
    let q = |r, delta| {
        exact_chromatic_index(&plane_with_copies(r, delta).unwrap(), DEFAULT_BUDGET)
            .unwrap()
            .q
    };
    let (a, b) = (q(4, 3), q(4, 6));
    outcome(
        a == 7 && b == 14,
        format!("thm13ii:4,3 q={a}, thm13ii:4,6 q={b}"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut mismatches = 0;
    for seed in 0..200u64 {
        let n = 3 + (seed % 5) as usize;
        let m = 1 + (seed % 5) as usize;
        let h = random_hypergraph(seed, n, m, 2..=n.min(4), false).unwrap();
        let q = exact_chromatic_index(&h, DEFAULT_BUDGET).unwrap().q;
        if q != brute_chromatic_index(&h) {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("200 instances, {mismatches} mismatches"),
    )
}

fn structural_properties() -> Outcome {
    let mut failures = 0;
    for seed in 0..1000u64 {
        let n = 2 + (seed % 9) as usize;
        let m = (seed / 9 % 12) as usize;
        let linear = seed % 2 == 0;
        let Ok(h) = random_hypergraph(seed, n, m, 1..=n.min(5), linear) else {
            continue;
        };
        let s = stats(&h);
        let sums = s.degrees.iter().sum::<usize>() == s.ranks.iter().sum::<usize>();
        let involution = h.dual().dual() == h;
        let linearity = h.is_linear() == h.dual().is_linear();
        let triangles = (0..h.m()).all(|e| {
            let t = count_triangles(&h, e).unwrap();
            t.total == t.t1 + t.t2 && (t.t1, t.t2) == brute_triangles(&h, e)
        });
        if !(sums && involution && linearity && triangles) {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("1000 seeds, {failures} failures"))
}

fn criticality() -> Outcome {
    let fano = critical_check(&projective_plane(2).unwrap(), DEFAULT_BUDGET).unwrap();
    let path = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
    let path = critical_check(&path, DEFAULT_BUDGET).unwrap();
    outcome(
        fano.all_hold() && !path.exceeds_d,
        format!(
            "Fano all four: {}, path condition (i): {}",
            fano.all_hold(),
            path.exceeds_d
        ),
    )
}

fn enumeration_counts() -> Outcome {
    let two = enumerate(&EnumSpec::new(2)).unwrap().count();
    let three = enumerate(&EnumSpec::new(3)).unwrap().count();
    let (two_oracle, three_oracle) = (brute_class_count(2, 2, true), brute_class_count(3, 3, true));
    outcome(
        (two, three) == (1, 4) && (two, three) == (two_oracle, three_oracle),
        format!("n=2: {two} (oracle {two_oracle}), n=3: {three} (oracle {three_oracle})"),
    )
}

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        (
            "Fano certification",
            Duration::from_secs(1),
            Box::new(fano_certification),
        ),
        (
            "C1 over linear classes n<=5",
            Duration::from_secs(300),
            Box::new(|| bound_over_corpus(&corpus, ConjectureId::C1)),
        ),
        (
            "C2 over linear classes n<=5",
            Duration::from_secs(300),
            Box::new(|| bound_over_corpus(&corpus, ConjectureId::C2)),
        ),
        (
            "q <= R+1, equality only at complete/odd-cycle line graph",
            Duration::from_secs(300),
            Box::new(|| clique_rank_bound(&corpus)),
        ),
        (
            "rank-peeling coloring within n colors",
            Duration::from_secs(300),
            Box::new(|| rank_induction(&corpus)),
        ),
        (
            "plane with copied lines",
            Duration::from_secs(60),
            Box::new(plane_copies),
        ),
        (
            "exact solver vs brute force, 200 instances",
            Duration::from_secs(60),
            Box::new(oracle_equivalence),
        ),
        (
            "structural properties, 1000 seeds",
            Duration::from_secs(300),
            Box::new(structural_properties),
        ),
        (
            "criticality conditions",
            Duration::from_secs(60),
            Box::new(criticality),
        ),
        (
            "enumeration counts",
            Duration::from_secs(60),
            Box::new(enumeration_counts),
        ),
    ];

    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= *limit;
        if !ok {
            failed += 1;
        }
        println!(
            "{} [{:>2}] {name}: {} ({:.3}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
