//! JSON formats for root data, p-morphisms, Steinberg data and permutation
//! groups.
//!
//! A p-morphism document names the datum of the source group under `from`
//! and that of the target group under `to`. Its `matrix` is the map of
//! character lattices `X(to) → X(from)`, written with the images of the basis
//! of `X(to)` as columns. Either datum may be inlined or given as a path,
//! resolved relative to the document that mentions it.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::clifford::{Character, PermGroup};
use crate::isotypy::PMorphism;
use crate::lattice::LatticeMap;
use crate::root_datum::{BasedRootDatum, RootDatum};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootDatumJson {
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl RootDatumJson {
    pub fn from_based(b: &BasedRootDatum, name: Option<String>) -> Self {
        let d = b.datum();
        RootDatumJson {
            rank: d.rank(),
            roots: d.roots().to_vec(),
            coroots: d.coroots().to_vec(),
            simple: Some(b.simple().to_vec()),
            name,
        }
    }

    pub fn from_datum(d: &RootDatum) -> Self {
        RootDatumJson { rank: d.rank(), roots: d.roots().to_vec(), coroots: d.coroots().to_vec(), simple: None, name: None }
    }

    /// Shape-checked but not validated.
    pub fn raw(&self) -> Result<RootDatum> {
        RootDatum::from_parts(self.rank, self.roots.clone(), self.coroots.clone())
    }

    pub fn datum(&self) -> Result<RootDatum> {
        RootDatum::new(self.rank, self.roots.clone(), self.coroots.clone())
    }

    /// With the given simple roots, or a default base when none are listed.
    pub fn based(&self) -> Result<BasedRootDatum> {
        let d = self.datum()?;
        match &self.simple {
            Some(s) => BasedRootDatum::new(d, s.clone()),
            None => BasedRootDatum::with_default_base(d),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatumRef {
    Path(String),
    Inline(RootDatumJson),
}

impl DatumRef {
    fn resolve(&self, base: &Path) -> Result<RootDatumJson> {
        match self {
            DatumRef::Inline(d) => Ok(d.clone()),
            DatumRef::Path(p) => read_json(&resolve_path(base, p)),
        }
    }
}

fn resolve_path(base: &Path, p: &str) -> PathBuf {
    let rel = base.join(p);
    if rel.exists() {
        rel
    } else {
        PathBuf::from(p)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PMorphismJson {
    pub from: DatumRef,
    pub to: DatumRef,
    pub matrix: Vec<Vec<i64>>,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub based: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupJson {
    pub fn build(&self) -> Result<PermGroup> {
        if let Some(g) = self.generators.iter().find(|g| g.len() != self.degree) {
            return Err(Error::Dimension(format!("generator of length {} on {} points", g.len(), self.degree)));
        }
        let g = PermGroup::from_one_based(self.degree, &self.generators)?;
        Ok(match &self.name {
            Some(n) => g.named(n.clone()),
            None => g,
        })
    }

    pub fn from_group(g: &PermGroup) -> Self {
        GroupJson {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.one_based()).collect(),
            name: g.name().map(str::to_owned),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn parent_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn read_root_datum(path: &Path) -> Result<RootDatumJson> {
    read_json(path)
}

/// The p-morphism described by the document; `p_override` replaces its `p`.
pub fn read_pmorphism(path: &Path, p_override: Option<u64>) -> Result<PMorphism> {
    let doc: PMorphismJson = read_json(path)?;
    pmorphism_from_json(&doc, &parent_dir(path), p_override)
}

pub fn pmorphism_from_json(doc: &PMorphismJson, base: &Path, p_override: Option<u64>) -> Result<PMorphism> {
    let from = doc.from.resolve(base)?.datum()?;
    let to = doc.to.resolve(base)?.datum()?;
    if doc.matrix.len() != from.rank() {
        return Err(Error::Dimension(format!("matrix has {} rows, expected {}", doc.matrix.len(), from.rank())));
    }
    let f = LatticeMap::from_rows(&doc.matrix, to.rank())?;
    PMorphism::infer(f, p_override.unwrap_or(doc.p), to, from)
}

/// Based datum and endomorphism of a Steinberg document (`from` = `to`).
pub fn read_steinberg(path: &Path) -> Result<(BasedRootDatum, PMorphism)> {
    let doc: PMorphismJson = read_json(path)?;
    let base = parent_dir(path);
    let datum = doc.from.resolve(&base)?;
    let based = datum.based()?;
    let m = pmorphism_from_json(&doc, &base, None)?;
    Ok((based, m))
}

pub fn pmorphism_to_json(m: &PMorphism) -> serde_json::Value {
    serde_json::json!({
        "from": RootDatumJson::from_datum(m.target()),
        "to": RootDatumJson::from_datum(m.source()),
        "matrix": m.f().matrix().to_i64_rows(),
        "p": m.p(),
        "q": m.q(),
        "tau": m.tau(),
    })
}

pub fn read_group(path: &Path) -> Result<PermGroup> {
    read_json::<GroupJson>(path)?.build()
}

pub fn character_to_json(chi: &Character) -> Vec<String> {
    chi.values().iter().map(|v| v.to_string()).collect()
}

/// Classes as `{representative, size, order}` with 1-based cycle notation.
pub fn classes_to_json(g: &PermGroup) -> serde_json::Value {
    let classes: Vec<_> = g
        .classes()
        .iter()
        .map(|c| serde_json::json!({ "representative": g.element(c.rep).to_string(), "size": c.size(), "order": c.element_order }))
        .collect();
    serde_json::Value::Array(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_pmorphism() {
        let text = r#"{"from": {"rank":1,"roots":[[2],[-2]],"coroots":[[1],[-1]]},
                       "to": {"rank":1,"roots":[[1],[-1]],"coroots":[[2],[-2]]},
                       "matrix": [[2]], "p": 2}"#;
        let doc: PMorphismJson = serde_json::from_str(text).unwrap();
        let m = pmorphism_from_json(&doc, Path::new("."), None).unwrap();
        // X(PGL2) → X(SL2), α ↦ α
        assert_eq!(m.q(), &[1, 1]);
        let round: PMorphismJson = serde_json::from_value(pmorphism_to_json(&m)).unwrap();
        assert_eq!(pmorphism_from_json(&round, Path::new("."), None).unwrap(), m);
    }

    #[test]
    fn group_round_trip() {
        let g: GroupJson = serde_json::from_str(r#"{"degree":3,"generators":[[2,3,1],[2,1,3]],"name":"S3"}"#).unwrap();
        let grp = g.build().unwrap();
        assert_eq!(grp.order(), 6);
        assert_eq!(GroupJson::from_group(&grp).generators, g.generators);
        let bad: GroupJson = serde_json::from_str(r#"{"degree":3,"generators":[[1,1,3]]}"#).unwrap();
        assert!(bad.build().is_err());
    }
}
