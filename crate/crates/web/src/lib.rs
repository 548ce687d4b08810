//! Browser bindings. Each export takes and returns plain strings (`.hyp`
//! text or JSON) so the page needs no generated types.

use std::collections::BTreeMap;

use hypercolor::conjectures::{
    brooks_exception, verify_conjectures, BrooksException, ConjectureId, ConjectureReport, Status,
};
use hypercolor::constructions::{
    affine_plane, plane_with_copies, projective_plane, ConstructionSpec,
};
use hypercolor::enumeration::{enumerate, EnumSpec};
use hypercolor::io::{parse_hyp, to_hyp};
use hypercolor::random::random_hypergraph;
use hypercolor::{exact_chromatic_index, stats, StatsProfile};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest `n` offered by [`survey`]; bigger corpora stall the page.
pub const SURVEY_MAX_N: usize = 6;

/// Node budget for the exact solver on user input.
pub const PAGE_BUDGET: u64 = 2_000_000;

pub fn construct_text(spec: &str, seed: u64) -> Result<String, String> {
    let spec: ConstructionSpec = spec.parse().map_err(|e| format!("{e}"))?;
    let h = match spec {
        ConstructionSpec::ProjectivePlane { order } => projective_plane(order),
        ConstructionSpec::AffinePlane { order } => affine_plane(order),
        ConstructionSpec::PlaneWithCopies { rank, degree } => plane_with_copies(rank, degree),
        ConstructionSpec::Random {
            n,
            m,
            min_rank,
            max_rank,
        } => {
            return random_hypergraph(seed, n, m, min_rank..=max_rank, true)
                .map(|h| to_hyp(&h))
                .map_err(|e| e.to_string())
        }
        ConstructionSpec::Dual { .. } => return Err("dual: needs a file; use the CLI".into()),
    };
    h.map(|h| to_hyp(&h)).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    edges: Vec<Vec<usize>>,
    linear: bool,
    profile: StatsProfile,
    q: Option<usize>,
    colors: Option<Vec<usize>>,
    nodes_expanded: Option<u64>,
    line_graph_exception: BrooksException,
    bounds: Vec<ConjectureReport>,
}

pub fn analyze_text(hyp: &str) -> Result<String, String> {
    let h = parse_hyp(hyp).map_err(|e| e.to_string())?;
    let solved = exact_chromatic_index(&h, PAGE_BUDGET).ok();
    let analysis = Analysis {
        n: h.n(),
        edges: h.edges().to_vec(),
        linear: h.is_linear(),
        profile: stats(&h),
        q: solved.as_ref().map(|s| s.q),
        nodes_expanded: solved.as_ref().map(|s| s.stats.nodes_expanded),
        colors: solved.map(|s| s.coloring.colors),
        line_graph_exception: brooks_exception(&h),
        bounds: verify_conjectures(&h, &ConjectureId::ALL, PAGE_BUDGET),
    };
    serde_json::to_string(&analysis).map_err(|e| e.to_string())
}

#[derive(Serialize, Default)]
struct SurveyRow {
    pass: usize,
    exception_case_pass: usize,
    violation: usize,
    not_applicable: usize,
    inconclusive: usize,
    /// Edge lists of the first few violating classes.
    examples: Vec<(usize, Vec<Vec<usize>>)>,
}

/// Status counts for every bound over all linear classes with
/// `2 <= n <= max_n`.
pub fn survey_text(max_n: usize) -> Result<String, String> {
    if !(2..=SURVEY_MAX_N).contains(&max_n) {
        return Err(format!("n must be between 2 and {SURVEY_MAX_N}"));
    }
    let mut rows: BTreeMap<String, SurveyRow> = ConjectureId::ALL
        .iter()
        .map(|id| (id.to_string(), SurveyRow::default()))
        .collect();
    let mut classes = 0;
    for n in 2..=max_n {
        for h in enumerate(&EnumSpec::new(n)).map_err(|e| e.to_string())? {
            classes += 1;
            for r in verify_conjectures(&h, &ConjectureId::ALL, PAGE_BUDGET) {
                let row = rows.get_mut(&r.id.to_string()).expect("every id has a row");
                match r.status {
                    Status::Pass => row.pass += 1,
                    Status::ExceptionCasePass => row.exception_case_pass += 1,
                    Status::NotApplicable => row.not_applicable += 1,
                    Status::Inconclusive => row.inconclusive += 1,
                    Status::Violation => {
                        row.violation += 1;
                        if row.examples.len() < 3 {
                            row.examples.push((h.n(), h.edges().to_vec()));
                        }
                    }
                }
            }
        }
    }
    serde_json::to_string(&serde_json::json!({ "classes": classes, "bounds": rows }))
        .map_err(|e| e.to_string())
}

/// `.hyp` text for a construction spec (`plane:p`, `affine:p`,
/// `thm13ii:r,delta`, `random:n,m,lo,hi`).
#[wasm_bindgen]
pub fn construct(spec: &str, seed: u32) -> Result<String, JsValue> {
    construct_text(spec, seed.into()).map_err(|e| JsValue::from_str(&e))
}

/// JSON with the edges, statistics, an optimal coloring and bound checks.
#[wasm_bindgen]
pub fn analyze(hyp: &str) -> Result<String, JsValue> {
    analyze_text(hyp).map_err(|e| JsValue::from_str(&e))
}

/// JSON status counts for each bound over the small linear corpus.
#[wasm_bindgen]
pub fn survey(max_n: u32) -> Result<String, JsValue> {
    survey_text(max_n as usize).map_err(|e| JsValue::from_str(&e))
}
