//! Spec files: JSON with scalars as strings, so rationals stay exact.
//!
//! ```json
//! {
//!   "N": 2,
//!   "F": [["1", "0"], ["0", "1"]],
//!   "preset": "O+",
//!   "generators": [
//!     {"kind": "partition", "upper": "", "lower": "ww", "blocks": [[0, 1]]},
//!     {"kind": "matrix", "domain": "wb", "codomain": "bw", "entries": [["1", "0", ...], ...]}
//!   ],
//!   "cutoffs": {"report": 6, "work": 8},
//!   "modulus": 4
//! }
//! ```
//!
//! Words and scalars are validated while deserializing, so their errors
//! carry a line and column.

use std::str::FromStr;

use serde::Deserialize;

use qgcat::category::{closure, FixTable};
use qgcat::frame::{make_frame, mor_to_fix, Frame};
use qgcat::linalg::{LinMap, Scalar, Subspace};
use qgcat::partitions::{partition_map, preset_generators, Partition};
use qgcat::words::Word;
use qgcat::{Error, Result};

#[derive(Clone, Debug, Deserialize)]
#[serde(try_from = "String")]
pub struct WordText(pub Word);

impl TryFrom<String> for WordText {
    type Error = Error;
    fn try_from(s: String) -> Result<WordText> {
        Word::from_str(&s).map(WordText)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(try_from = "String")]
pub struct ScalarText(pub Scalar);

impl TryFrom<String> for ScalarText {
    type Error = Error;
    fn try_from(s: String) -> Result<ScalarText> {
        Scalar::from_str(&s).map(ScalarText)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Generator {
    Partition {
        #[serde(default = "empty_word")]
        upper: WordText,
        lower: WordText,
        blocks: Vec<Vec<usize>>,
    },
    Matrix {
        domain: WordText,
        codomain: WordText,
        /// Rows indexed by the codomain basis.
        entries: Vec<Vec<ScalarText>>,
    },
}

fn empty_word() -> WordText {
    WordText(Word::empty())
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cutoffs {
    pub report: usize,
    pub work: usize,
}

impl Default for Cutoffs {
    fn default() -> Cutoffs {
        Cutoffs { report: 6, work: 8 }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QGSpec {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "F", default)]
    pub f: Option<Vec<Vec<ScalarText>>>,
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub cutoffs: Cutoffs,
    #[serde(default)]
    pub modulus: Option<u32>,
}

impl QGSpec {
    /// Parses spec text. Syntax errors report line and column.
    pub fn parse(text: &str) -> Result<QGSpec> {
        let spec: QGSpec = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        if spec.n == 0 {
            return Err(Error::Parse("N must be positive".into()));
        }
        Ok(spec)
    }

    pub fn from_preset(name: &str, n: usize) -> Result<QGSpec> {
        if preset_generators(name).is_none() {
            return Err(Error::Parse(format!("unknown preset {name:?}")));
        }
        Ok(QGSpec {
            n,
            f: None,
            preset: Some(name.to_string()),
            generators: Vec::new(),
            cutoffs: Cutoffs::default(),
            modulus: None,
        })
    }

    pub fn frame(&self) -> Result<Frame> {
        match &self.f {
            None => Ok(Frame::identity(self.n)),
            Some(rows) => {
                if rows.len() != self.n {
                    return Err(Error::Shape(format!(
                        "F has {} rows, N is {}",
                        rows.len(),
                        self.n
                    )));
                }
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|s| s.0.clone()).collect())
                    .collect();
                make_frame(&LinMap::matrix(rows)?)
            }
        }
    }

    /// All generators, presets first, as fixed-vector spaces.
    pub fn fix_generators(&self, fr: &Frame) -> Result<Vec<(Word, Subspace)>> {
        let mut maps: Vec<(Word, Word, LinMap)> = Vec::new();
        if let Some(name) = &self.preset {
            let parts = preset_generators(name)
                .ok_or_else(|| Error::Parse(format!("unknown preset {name:?}")))?;
            for p in parts {
                maps.push((p.upper().clone(), p.lower().clone(), partition_map(&p, self.n)));
            }
        }
        for (i, g) in self.generators.iter().enumerate() {
            let tag = |e: Error| match e {
                Error::Parse(m) => Error::Parse(format!("generator {i}: {m}")),
                Error::Shape(m) => Error::Shape(format!("generator {i}: {m}")),
                other => other,
            };
            match g {
                Generator::Partition {
                    upper,
                    lower,
                    blocks,
                } => {
                    let p = Partition::new(upper.0.clone(), lower.0.clone(), blocks).map_err(tag)?;
                    maps.push((upper.0.clone(), lower.0.clone(), partition_map(&p, self.n)));
                }
                Generator::Matrix {
                    domain,
                    codomain,
                    entries,
                } => {
                    let (rows, cols) = (
                        self.n.pow(codomain.0.len() as u32),
                        self.n.pow(domain.0.len() as u32),
                    );
                    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
                        return Err(tag(Error::Shape(format!(
                            "expected {rows} rows of {cols} entries"
                        ))));
                    }
                    let flat = entries.iter().flatten().map(|s| s.0.clone()).collect();
                    let t = LinMap::from_entries(self.n, domain.0.len(), codomain.0.len(), flat)
                        .map_err(tag)?;
                    maps.push((domain.0.clone(), codomain.0.clone(), t));
                }
            }
        }
        maps.into_iter()
            .map(|(w1, w2, t)| {
                let v = mor_to_fix(fr, &t, &w1, &w2)?;
                let w = w2.concat(&w1.star());
                let s = Subspace::span_in(self.n, 0, w.len(), &[v])?;
                Ok((w, s))
            })
            .collect()
    }

    pub fn table(&self) -> Result<FixTable> {
        let fr = self.frame()?;
        let gens = self.fix_generators(&fr)?;
        closure(&fr, &gens, self.cutoffs.report, self.cutoffs.work)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_spec() {
        let text = r#"{
            "N": 2,
            "F": [["1", "0"], ["0", "i"]],
            "generators": [
                {"kind": "partition", "lower": "ww", "blocks": [[0, 1]]},
                {"kind": "matrix", "domain": "w", "codomain": "w", "entries": [["1", "0"], ["0", "1/2"]]}
            ],
            "cutoffs": {"report": 4, "work": 6},
            "modulus": 3
        }"#;
        let s = QGSpec::parse(text).unwrap();
        assert_eq!(s.n, 2);
        assert_eq!(s.modulus, Some(3));
        assert_eq!(s.cutoffs.work, 6);
        let fr = s.frame().unwrap();
        let g = s.fix_generators(&fr).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[1].0.to_string(), "wb");
    }

    #[test]
    fn errors_carry_positions() {
        let e = QGSpec::parse("{\n  \"N\": 2,\n  \"generators\": [{\"kind\": \"partition\", \"lower\": \"wx\", \"blocks\": []}]\n}")
            .unwrap_err();
        let Error::Parse(m) = e else { panic!() };
        assert!(m.starts_with("line 3, column"), "{m}");
        assert!(QGSpec::parse("{\"N\": 2, \"F\": [[\"1/0\"]]}").is_err());
        assert!(QGSpec::parse("{\"N\": 2, \"bogus\": 1}").is_err());
    }

    #[test]
    fn shape_errors_name_the_generator() {
        let s = QGSpec::parse(
            r#"{"N": 2, "generators": [{"kind": "matrix", "domain": "w", "codomain": "w", "entries": [["1"]]}]}"#,
        )
        .unwrap();
        let e = s.fix_generators(&s.frame().unwrap()).unwrap_err();
        assert!(matches!(e, Error::Shape(m) if m.starts_with("generator 0")));
    }

    #[test]
    fn presets_expand() {
        let s = QGSpec::from_preset("S+", 2).unwrap();
        assert_eq!(s.fix_generators(&s.frame().unwrap()).unwrap().len(), 3);
        assert!(QGSpec::from_preset("X+", 2).is_err());
    }
}
