//! The `polyq/1` JSON document format.
//!
//! A document carries a ground-set size and either a full base list or a
//! rank table. Rank tables must be total unless they opt into a declared
//! fill rule with `"complete": false`; nothing is ever defaulted silently.

use polyq_core::base::polymatroid_from_bases;
use polyq_core::{GroundSet, Polymatroid, Subset};
use serde::{Deserialize, Serialize};

pub const FORMAT: &str = "polyq/1";

/// The only supported fill rule for sparse rank tables: missing values
/// become `min(r(E), Σ r({i}))`, which needs `r(E)` and all singletons.
pub const FILL_SINGLETON_TRUNCATION: &str = "singleton-truncation";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputDocument {
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<Vec<(Vec<usize>, i64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fill: Option<String>,
}

#[derive(Debug)]
pub enum IoError {
    Parse(String),
    Domain(polyq_core::Error),
}

impl std::fmt::Display for IoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IoError::Parse(msg) => write!(f, "invalid document: {msg}"),
            IoError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<polyq_core::Error> for IoError {
    fn from(e: polyq_core::Error) -> Self {
        IoError::Domain(e)
    }
}

impl InputDocument {
    pub fn from_polymatroid(name: Option<String>, m: &Polymatroid) -> Self {
        InputDocument {
            format: FORMAT.to_string(),
            name,
            n: m.n(),
            bases: Some(m.bases().iter().map(|b| b.coords().to_vec()).collect()),
            rank: None,
            complete: None,
            fill: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        let doc: InputDocument =
            serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
        if doc.format != FORMAT {
            return Err(IoError::Parse(format!(
                "unsupported format {:?}, expected {FORMAT:?}",
                doc.format
            )));
        }
        Ok(doc)
    }

    /// Validates and converts to a polymatroid.
    pub fn to_polymatroid(&self) -> Result<Polymatroid, IoError> {
        let ground = GroundSet::new(self.n)?;
        match (&self.bases, &self.rank) {
            (Some(_), Some(_)) => Err(IoError::Parse("document has both bases and rank".into())),
            (None, None) => Err(IoError::Parse("document has neither bases nor rank".into())),
            (Some(bases), None) => Ok(polymatroid_from_bases(self.n, bases)?),
            (None, Some(entries)) => {
                let table = self.rank_table(ground, entries)?;
                Ok(Polymatroid::from_table(ground, table)?)
            }
        }
    }

    fn rank_table(
        &self,
        ground: GroundSet,
        entries: &[(Vec<usize>, i64)],
    ) -> Result<Vec<i64>, IoError> {
        let mut table: Vec<Option<i64>> = vec![None; ground.subset_count()];
        for (elements, value) in entries {
            if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > self.n) {
                return Err(IoError::Parse(format!(
                    "element {bad} out of 1..={}",
                    self.n
                )));
            }
            let mut sorted = elements.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != elements.len() {
                return Err(IoError::Parse(format!(
                    "subset {elements:?} has duplicate elements"
                )));
            }
            let key = Subset::from_elements(sorted).0 as usize;
            if table[key].is_some() {
                return Err(IoError::Parse(format!("subset {elements:?} listed twice")));
            }
            table[key] = Some(*value);
        }
        let missing = table.iter().filter(|v| v.is_none()).count();
        if missing == 0 {
            return Ok(table.into_iter().map(|v| v.expect("checked")).collect());
        }
        if self.complete != Some(false) {
            return Err(IoError::Parse(format!(
                "rank table is missing {missing} subsets; totals are required unless \
                 \"complete\": false declares a fill rule"
            )));
        }
        match self.fill.as_deref() {
            Some(FILL_SINGLETON_TRUNCATION) => {}
            Some(other) => {
                return Err(IoError::Parse(format!("unknown fill rule {other:?}")));
            }
            None => {
                return Err(IoError::Parse(
                    "\"complete\": false requires a \"fill\" rule".into(),
                ));
            }
        }
        let full = ground.full_subset().0 as usize;
        let total = table[full].ok_or_else(|| IoError::Parse("fill rule needs r(E)".into()))?;
        let singles: Vec<i64> = (1..=self.n)
            .map(|e| {
                table[Subset::singleton(e).0 as usize]
                    .ok_or_else(|| IoError::Parse(format!("fill rule needs r({{{e}}})")))
            })
            .collect::<Result<_, _>>()?;
        Ok(ground
            .subsets()
            .map(|s| {
                table[s.0 as usize].unwrap_or_else(|| {
                    let modular: i64 = s.elements().map(|e| singles[e - 1]).sum();
                    modular.min(total)
                })
            })
            .collect())
    }

    /// Renders the document with one base vector or rank entry per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"format\": {},\n", json_str(&self.format)));
        if let Some(name) = &self.name {
            out.push_str(&format!("  \"name\": {},\n", json_str(name)));
        }
        out.push_str(&format!("  \"n\": {}", self.n));
        if let Some(bases) = &self.bases {
            out.push_str(",\n  \"bases\": [\n");
            for (i, b) in bases.iter().enumerate() {
                let row: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("    [{}]", row.join(", ")));
                if i + 1 < bases.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("  ]");
        }
        if let Some(rank) = &self.rank {
            out.push_str(",\n  \"rank\": [\n");
            for (i, (subset, value)) in rank.iter().enumerate() {
                let row: Vec<String> = subset.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("    [[{}], {}]", row.join(", "), value));
                if i + 1 < rank.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("  ]");
        }
        if let Some(complete) = self.complete {
            out.push_str(&format!(",\n  \"complete\": {complete}"));
        }
        if let Some(fill) = &self.fill {
            out.push_str(&format!(",\n  \"fill\": {}", json_str(fill)));
        }
        out.push_str("\n}");
        out
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

pub fn read_polymatroid(path: &str) -> Result<(Option<String>, Polymatroid), IoError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| IoError::Parse(format!("cannot read {path}: {e}")))?;
    let doc = InputDocument::parse(&text)?;
    let m = doc.to_polymatroid()?;
    Ok((doc.name, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases_document_roundtrip() {
        let m = polyq_core::corpus::example_matroid();
        let doc = InputDocument::from_polymatroid(Some("example-1".into()), &m);
        let text = doc.to_json();
        let parsed = InputDocument::parse(&text).unwrap();
        assert_eq!(parsed.to_polymatroid().unwrap(), m);
    }

    #[test]
    fn rank_document() {
        let text = r#"{
            "format": "polyq/1",
            "n": 2,
            "rank": [[[], 0], [[1], 1], [[2], 1], [[1, 2], 1]]
        }"#;
        let doc = InputDocument::parse(text).unwrap();
        assert_eq!(
            doc.to_polymatroid().unwrap(),
            polyq_core::corpus::uniform(1, 2)
        );
    }

    #[test]
    fn sparse_rank_requires_declared_fill() {
        let missing = r#"{
            "format": "polyq/1",
            "n": 2,
            "rank": [[[], 0], [[1], 1], [[2], 1]]
        }"#;
        assert!(InputDocument::parse(missing)
            .unwrap()
            .to_polymatroid()
            .is_err());

        let filled = r#"{
            "format": "polyq/1",
            "n": 2,
            "rank": [[[], 0], [[1], 1], [[2], 1], [[1, 2], 1]],
            "complete": false,
            "fill": "singleton-truncation"
        }"#;
        // Fully listed but flagged sparse: still fine.
        assert!(InputDocument::parse(filled)
            .unwrap()
            .to_polymatroid()
            .is_ok());

        let sparse = r#"{
            "format": "polyq/1",
            "n": 3,
            "rank": [[[], 0], [[1], 1], [[2], 1], [[3], 1], [[1, 2, 3], 2]],
            "complete": false,
            "fill": "singleton-truncation"
        }"#;
        let m = InputDocument::parse(sparse)
            .unwrap()
            .to_polymatroid()
            .unwrap();
        assert_eq!(m, polyq_core::corpus::uniform(2, 3));
    }

    #[test]
    fn format_and_exclusivity_checks() {
        assert!(InputDocument::parse(r#"{"format":"polyq/2","n":1,"bases":[[1]]}"#).is_err());
        let both = r#"{"format":"polyq/1","n":1,"bases":[[1]],"rank":[[[],0],[[1],1]]}"#;
        assert!(InputDocument::parse(both)
            .unwrap()
            .to_polymatroid()
            .is_err());
    }
}
