//! Corpus selection for `verify`: either the grammar `n<=K[,rank<=P][,deg<=D]`
//! or a file of `.hyp` records.

use std::path::Path;

use anyhow::{bail, Context, Result};
use hypercolor::enumeration::{enumerate, EnumSpec, MAX_ENUM_VERTICES};
use hypercolor::io::parse_hyp_many;
use hypercolor::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub max_n: usize,
    pub max_rank: Option<usize>,
    pub max_degree: Option<usize>,
}

impl CorpusSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let mut spec = CorpusSpec {
            max_n: 0,
            max_rank: None,
            max_degree: None,
        };
        let mut saw_n = false;
        for part in s.split(',') {
            let Some((key, value)) = part.split_once("<=") else {
                bail!("corpus term {part:?} is not of the form key<=value");
            };
            let value: usize = value
                .trim()
                .parse()
                .with_context(|| format!("corpus bound {:?} is not an integer", value.trim()))?;
            match key.trim() {
                "n" => {
                    spec.max_n = value;
                    saw_n = true;
                }
                "rank" => spec.max_rank = Some(value),
                "deg" => spec.max_degree = Some(value),
                other => bail!("unknown corpus key {other:?} (expected n, rank or deg)"),
            }
        }
        if !saw_n {
            bail!("corpus spec needs an n<=K term");
        }
        if spec.max_n > MAX_ENUM_VERTICES {
            bail!(
                "n<={} is above the enumeration limit of {MAX_ENUM_VERTICES}",
                spec.max_n
            );
        }
        if spec.max_rank.is_some_and(|p| p < 2) {
            bail!("rank<= must be at least 2");
        }
        Ok(spec)
    }

    /// Every admitted class for `n = 2..=K`, in generation order.
    pub fn instances(&self) -> Result<Vec<Hypergraph>> {
        let mut out = Vec::new();
        for n in 2..=self.max_n {
            let mut spec = EnumSpec::new(n).max_rank(self.max_rank.unwrap_or(n).min(n));
            if let Some(d) = self.max_degree {
                spec = spec.max_degree(d);
            }
            out.extend(enumerate(&spec)?);
        }
        Ok(out)
    }
}

/// A readable file wins over the grammar.
pub fn load(arg: &str) -> Result<Vec<Hypergraph>> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return parse_hyp_many(&text).with_context(|| format!("parsing {arg}"));
    }
    CorpusSpec::parse(arg)
        .with_context(|| format!("{arg:?} is neither a file nor a corpus spec"))?
        .instances()
}
