//! JSON and plain-text interchange for paths and rigged configurations.
//!
//! ```json
//! {"kind":"path","n":2,"B":[[2,1],[1,2]],"factors":[[[1],[3]],[[1,2]]]}
//! {"kind":"rc","n":1,"B":[[1,1]],"levels":[[[1,-1]]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{Path, Rect, RectangleSeq};
use crate::rigged::RiggedConfiguration;
use crate::young::{Letter, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Document {
    Path {
        n: usize,
        #[serde(rename = "B")]
        shape: Vec<[usize; 2]>,
        factors: Vec<Vec<Vec<Letter>>>,
    },
    Rc {
        n: usize,
        #[serde(rename = "B")]
        shape: Vec<[usize; 2]>,
        levels: Vec<Vec<(usize, i64)>>,
    },
}

fn encode_shape(shape: &RectangleSeq) -> Vec<[usize; 2]> {
    shape.rects().iter().map(|r| [r.height, r.width]).collect()
}

fn decode_shape(shape: &[[usize; 2]]) -> RectangleSeq {
    RectangleSeq(shape.iter().map(|&[r, s]| Rect::new(r, s)).collect())
}

impl From<&Path> for Document {
    fn from(p: &Path) -> Self {
        Document::Path {
            n: p.rank(),
            shape: encode_shape(&p.shape()),
            factors: p.factors().iter().map(|t| t.rows().to_vec()).collect(),
        }
    }
}

impl From<&RiggedConfiguration> for Document {
    fn from(rc: &RiggedConfiguration) -> Self {
        Document::Rc {
            n: rc.rank(),
            shape: encode_shape(rc.shape()),
            levels: rc
                .levels()
                .iter()
                .map(|nu| nu.strings().iter().map(|s| (s.length, s.label)).collect())
                .collect(),
        }
    }
}

impl Document {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn to_path(&self) -> Result<Path> {
        let Document::Path { n, shape, factors } = self else {
            return Err(Error::Parse("expected a path document".into()));
        };
        let tableaux = factors.iter().map(|rows| Tableau::new(rows.clone())).collect::<Result<Vec<_>>>()?;
        let p = Path::new(*n, tableaux)?;
        let declared = decode_shape(shape);
        if p.shape() != declared {
            return Err(Error::InvalidPath(format!("factors have shape {}, B says {declared}", p.shape())));
        }
        declared.check_rank(*n)?;
        Ok(p)
    }

    pub fn to_rc(&self) -> Result<RiggedConfiguration> {
        let Document::Rc { n, shape, levels } = self else {
            return Err(Error::Parse("expected an rc document".into()));
        };
        RiggedConfiguration::new(*n, decode_shape(shape), levels.clone())
    }

    /// Human-readable form; [`Document::parse_pretty`] reads it back.
    pub fn render(&self) -> Result<String> {
        Ok(match self {
            Document::Path { .. } => {
                let p = self.to_path()?;
                format!("path n={} B={}\n{}\n", p.rank(), p.shape(), p)
            }
            Document::Rc { .. } => self.to_rc()?.to_string(),
        })
    }

    pub fn parse_pretty(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut words = header.split_whitespace();
        let kind = words.next().unwrap_or_default();
        let n: usize = words
            .next()
            .and_then(|w| w.strip_prefix("n="))
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let shape = words
            .next()
            .and_then(|w| w.strip_prefix("B="))
            .map(parse_shape_tuple)
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))??;
        match kind {
            "path" => {
                let body = lines.next().unwrap_or("(empty)");
                let p = if body == "(empty)" { Path::empty(n) } else { Path::parse(n, body)? };
                if p.shape() != shape {
                    return Err(Error::Parse(format!("factors have shape {}, header says {shape}", p.shape())));
                }
                Ok(Document::from(&p))
            }
            "rc" => {
                let mut levels: Vec<Vec<(usize, i64)>> = Vec::new();
                for line in lines {
                    if line.starts_with("ν(") {
                        levels.push(Vec::new());
                        continue;
                    }
                    if line == "(empty)" {
                        continue;
                    }
                    let cur = levels.last_mut().ok_or_else(|| Error::Parse(format!("string before level: {line:?}")))?;
                    let body = line.trim_start_matches('□').trim();
                    let (len, label) =
                        body.split_once('|').ok_or_else(|| Error::Parse(format!("expected `length | label`: {line:?}")))?;
                    let len = len.trim().parse().map_err(|_| Error::Parse(format!("bad length in {line:?}")))?;
                    let label = label.trim().parse().map_err(|_| Error::Parse(format!("bad label in {line:?}")))?;
                    cur.push((len, label));
                }
                Ok(Document::from(&RiggedConfiguration::new(n, shape, levels)?))
            }
            other => Err(Error::Parse(format!("unknown kind {other:?}"))),
        }
    }
}

/// Reads `((2,2),(1,2))`.
fn parse_shape_tuple(s: &str) -> Result<RectangleSeq> {
    let nums: Vec<usize> = s
        .split(|c: char| !c.is_ascii_digit())
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(|_| Error::Parse(format!("bad shape {s:?}"))))
        .collect::<Result<_>>()?;
    if !nums.len().is_multiple_of(2) {
        return Err(Error::Parse(format!("bad shape {s:?}")));
    }
    Ok(RectangleSeq::new(nums.chunks(2).map(|c| (c[0], c[1]))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::phi;

    #[test]
    fn json_field_order_is_stable() {
        let p = Path::parse(2, "1/3 ⊗ 12").unwrap();
        let json = Document::from(&p).to_json();
        assert_eq!(json, r#"{"kind":"path","n":2,"B":[[2,1],[1,2]],"factors":[[[1],[3]],[[1,2]]]}"#);
        assert_eq!(Document::from_json(&json).unwrap().to_path().unwrap(), p);
    }

    #[test]
    fn rejects_mismatched_shape() {
        let doc = r#"{"kind":"path","n":2,"B":[[1,1]],"factors":[[[1,2]]]}"#;
        assert!(Document::from_json(doc).unwrap().to_path().is_err());
        let bad = r#"{"kind":"path","n":2,"B":[[1,1]],"factors":[[[1]]],"extra":1}"#;
        assert!(Document::from_json(bad).is_err());
    }

    #[test]
    fn rendering_reads_back() {
        let p = Path::parse(3, "12/23 ⊗ 12 ⊗ 1/2/4").unwrap();
        let rc = phi(&p);
        for doc in [Document::from(&p), Document::from(&rc)] {
            let text = doc.render().unwrap();
            assert_eq!(Document::parse_pretty(&text).unwrap(), doc, "{text}");
        }
    }

    #[test]
    fn rendering_of_the_running_example() {
        let rc = RiggedConfiguration::new(
            3,
            RectangleSeq::new([(2, 2), (1, 2), (3, 1)]),
            vec![vec![(2, -1)], vec![(1, 1)], vec![(1, -1)]],
        )
        .unwrap();
        let text = Document::from(&rc).render().unwrap();
        assert!(text.contains("2 | -1") && text.contains("1 | 1") && text.contains("1 | -1"), "{text}");
    }
}
