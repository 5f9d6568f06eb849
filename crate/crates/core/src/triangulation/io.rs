use serde::{Deserialize, Serialize};

use super::simplex::Simplex;
use super::Triangulation;
use crate::error::{Error, Result};

/// On-disk form of a triangulation; canonical emission sorts vertices and simplices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TriangulationFile {
    pub ambient: usize,
    pub dim: usize,
    pub simplices: Vec<Simplex>,
}

impl From<&Triangulation> for TriangulationFile {
    fn from(t: &Triangulation) -> Self {
        TriangulationFile {
            ambient: t.ambient(),
            dim: t.dim(),
            simplices: t.iter().cloned().collect(),
        }
    }
}

impl TryFrom<TriangulationFile> for Triangulation {
    type Error = Error;

    fn try_from(f: TriangulationFile) -> Result<Triangulation> {
        let t = Triangulation::new(f.simplices)?;
        if t.ambient() != f.ambient {
            return Err(Error::DimensionMismatch {
                expected: f.ambient,
                found: t.ambient(),
            });
        }
        if t.dim() != f.dim {
            return Err(Error::DimensionMismatch {
                expected: f.dim,
                found: t.dim(),
            });
        }
        Ok(t)
    }
}

impl Triangulation {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TriangulationFile::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Triangulation> {
        let f: TriangulationFile =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        f.try_into()
    }
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TriangulationFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        TriangulationFile::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let json = r#"{"ambient":2,"dim":2,"simplices":[[["1","1"],["0","0"],["1","0"]],[["0","0"],["1","1"],["0","1"]]]}"#;
        let t = Triangulation::from_json(json).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(Triangulation::from_json(&t.to_json()).unwrap(), t);
        let compact = serde_json::to_string(&t).unwrap();
        assert!(compact.starts_with(r#"{"ambient":2,"dim":2,"simplices":[[["0","0"],["0","1"],["1","1"]]"#));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Triangulation::from_json("{").is_err());
        let wrong_dim = r#"{"ambient":2,"dim":1,"simplices":[[["0","0"],["1","0"],["1","1"]]]}"#;
        assert!(Triangulation::from_json(wrong_dim).is_err());
        let degenerate = r#"{"ambient":2,"dim":2,"simplices":[[["0","0"],["1","1"],["2","2"]]]}"#;
        assert!(Triangulation::from_json(degenerate).is_err());
    }
}
