//! JSON file formats.
//!
//! A map is `{"n": 3, "alpha": [...], "beta": [...], "root": 1}` with
//! `alpha[i - 1] = α(i)`; gamma is always recomputed. Objects built on a
//! tree add fields to the same object: `"triples"`, `"increments"`,
//! `"labels"` (vertex id to label), `"sequence"` (opening sequence).

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bijection::{OpeningSequence, TreeWithTriples};
use crate::error::{Error, Result};
use crate::labelled::{LabelledMap, LabelledTree, Labelling, WellLabelledTriples};
use crate::perm::{CombMap, HalfEdge, Permutation, RootedMap, VertexId};
use crate::scheme::{Decomposition, DoublyMarkedTree, Scheme};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub n: usize,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<HalfEdge>,
}

impl MapFile {
    pub fn from_map(m: &CombMap, root: Option<HalfEdge>) -> Self {
        MapFile {
            n: m.n(),
            alpha: m.alpha().images().to_vec(),
            beta: m.beta().images().to_vec(),
            root,
        }
    }

    pub fn from_rooted(m: &RootedMap) -> Self {
        MapFile::from_map(m, Some(1))
    }

    pub fn to_map(&self) -> Result<CombMap> {
        if self.alpha.len() != 2 * self.n {
            return Err(Error::LengthMismatch {
                expected: 2 * self.n,
                got: self.alpha.len(),
            });
        }
        CombMap::new(Permutation::new(&self.alpha)?, Permutation::new(&self.beta)?)
    }

    pub fn root(&self) -> HalfEdge {
        self.root.unwrap_or(1)
    }

    /// The canonical form rooted at `root`.
    pub fn to_rooted(&self) -> Result<RootedMap> {
        let m = self.to_map()?;
        Ok(m.canonicalize(self.root())?.0)
    }

    /// The map as given, which must already be canonical with root 1.
    /// Used where the file also names vertices.
    pub fn to_canonical(&self) -> Result<RootedMap> {
        if self.root() != 1 {
            return Err(Error::NotCanonical);
        }
        RootedMap::new(self.to_map()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeWithTriplesFile {
    #[serde(flatten)]
    pub tree: MapFile,
    pub triples: Vec<[u32; 3]>,
}

impl TreeWithTriplesFile {
    pub fn from_value(t: &TreeWithTriples) -> Self {
        TreeWithTriplesFile {
            tree: MapFile::from_rooted(t.tree()),
            triples: t.triples().iter().map(|c| c.map(|v| v.0)).collect(),
        }
    }

    pub fn to_value(&self) -> Result<TreeWithTriples> {
        let tree = self.tree.to_canonical()?;
        TreeWithTriples::new(tree, self.triples.iter().map(|c| c.map(VertexId)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledTreeFile {
    #[serde(flatten)]
    pub tree: MapFile,
    pub increments: Vec<i8>,
}

impl LabelledTreeFile {
    pub fn from_value(t: &LabelledTree) -> Self {
        LabelledTreeFile {
            tree: MapFile::from_rooted(&t.tree),
            increments: t.increments.clone(),
        }
    }

    pub fn to_value(&self) -> Result<LabelledTree> {
        LabelledTree::new(self.tree.to_canonical()?, self.increments.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellLabelledFile {
    #[serde(flatten)]
    pub tree: MapFile,
    pub triples: Vec<[u32; 3]>,
    pub increments: Vec<i8>,
}

impl WellLabelledFile {
    pub fn from_value(w: &WellLabelledTriples) -> Self {
        WellLabelledFile {
            tree: MapFile::from_rooted(w.base.tree()),
            triples: w.base.triples().iter().map(|c| c.map(|v| v.0)).collect(),
            increments: w.labelled.increments.clone(),
        }
    }

    pub fn to_value(&self) -> Result<WellLabelledTriples> {
        let base = TreeWithTriplesFile {
            tree: self.tree.clone(),
            triples: self.triples.clone(),
        }
        .to_value()?;
        WellLabelledTriples::new(base, self.increments.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledMapFile {
    #[serde(flatten)]
    pub map: MapFile,
    pub labels: BTreeMap<String, i64>,
}

impl LabelledMapFile {
    pub fn from_value(m: &LabelledMap) -> Self {
        LabelledMapFile {
            map: MapFile::from_rooted(&m.map),
            labels: m.labelling.labels.iter().map(|(v, l)| (v.0.to_string(), *l)).collect(),
        }
    }

    pub fn to_value(&self) -> Result<LabelledMap> {
        let map = self.map.to_canonical()?;
        let mut labels = BTreeMap::new();
        for (k, &l) in &self.labels {
            let id: u32 = k.parse().map_err(|_| Error::Format(format!("vertex id {k:?}")))?;
            labels.insert(VertexId(id), l);
        }
        LabelledMap::new(map, Labelling { labels })
    }
}

/// A map with an opening sequence, as written by `close`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedMapFile {
    #[serde(flatten)]
    pub map: MapFile,
    pub sequence: Vec<u32>,
}

impl ClosedMapFile {
    pub fn from_value(m: &RootedMap, seq: &OpeningSequence) -> Self {
        ClosedMapFile {
            map: MapFile::from_rooted(m),
            sequence: seq.nodes.iter().map(|v| v.0).collect(),
        }
    }

    pub fn to_value(&self) -> Result<(RootedMap, OpeningSequence)> {
        Ok((
            self.map.to_canonical()?,
            OpeningSequence::new(self.sequence.iter().copied().map(VertexId).collect()),
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedTreeFile {
    #[serde(flatten)]
    pub tree: MapFile,
    pub mark: u32,
}

/// Scheme, one marked tree per scheme edge (in edge order), and the root
/// mark as an ordered half-edge pair. Scheme edges are stored as
/// `(origin, opposite)` half-edge pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub scheme: MapFile,
    pub edges: Vec<[HalfEdge; 2]>,
    pub trees: Vec<MarkedTreeFile>,
    pub root_mark: [HalfEdge; 2],
}

impl DecompositionFile {
    pub fn from_value(d: &Decomposition) -> Self {
        DecompositionFile {
            scheme: MapFile::from_rooted(&d.scheme.map),
            edges: d.scheme.edges.iter().map(|&(a, b)| [a, b]).collect(),
            trees: d
                .trees
                .iter()
                .map(|t| MarkedTreeFile {
                    tree: MapFile::from_rooted(&t.tree),
                    mark: t.mark.0,
                })
                .collect(),
            root_mark: [d.root_mark.0, d.root_mark.1],
        }
    }

    pub fn to_value(&self) -> Result<Decomposition> {
        let scheme = Scheme::new(self.scheme.to_canonical()?)?;
        let edges: Vec<(HalfEdge, HalfEdge)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        if edges != scheme.edges {
            return Err(Error::InconsistentDecomposition("scheme edge list".into()));
        }
        let trees = self
            .trees
            .iter()
            .map(|t| {
                Ok(DoublyMarkedTree {
                    tree: t.tree.to_canonical()?,
                    mark: VertexId(t.mark),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            scheme,
            trees,
            root_mark: (self.root_mark[0], self.root_mark[1]),
        })
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    from_json(&fs::read_to_string(path)?)
}

pub fn read_map(path: &Path) -> Result<CombMap> {
    read_json::<MapFile>(path)?.to_map()
}

/// Writes through a sibling temporary file and a rename, so readers see
/// either the old or the new contents.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| Error::Format(format!("not a file path: {}", path.display())))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    fs::write(&tmp, contents)?;
    if let Err(e) = fs::rename(&tmp, path) {
        let _ = fs::remove_file(&tmp);
        return Err(e.into());
    }
    Ok(())
}
