//! Finite abstract simplicial complexes stored as canonical facet antichains.
//!
//! A [`Complex`] is immutable after construction. Vertices carry dense ids
//! `0..n` assigned in first-seen order from the input tokens; the original
//! tokens are kept as labels so derived complexes (links, skeleta) stay
//! comparable across different id assignments.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use itertools::Itertools;

use crate::error::{Error, Result};

/// Dense vertex index inside one [`Complex`].
pub type VertexId = u32;

/// A face: a strictly sorted set of vertex ids.
///
/// The empty face is a first-class value of dimension −1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Face {
    verts: Vec<VertexId>,
}

impl Face {
    /// Builds a face from an arbitrary vertex list; sorts and deduplicates.
    pub fn new(mut verts: Vec<VertexId>) -> Self {
        verts.sort_unstable();
        verts.dedup();
        Face { verts }
    }

    /// The empty face ∅.
    pub fn empty() -> Self {
        Face { verts: Vec::new() }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    /// Dimension: |vertices| − 1; the empty face has dimension −1.
    pub fn dim(&self) -> i64 {
        self.verts.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    /// Subset test on sorted vertex lists.
    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.verts.iter();
        self.verts
            .iter()
            .all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn is_disjoint_from(&self, other: &Face) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.verts.len() && j < other.verts.len() {
            match self.verts[i].cmp(&other.verts[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut verts = self.verts.clone();
        verts.extend_from_slice(&other.verts);
        Face::new(verts)
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &Face) -> Face {
        Face {
            verts: self
                .verts
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        }
    }

    /// The face obtained by deleting the `j`-th smallest vertex.
    pub fn delete_vertex_at(&self, j: usize) -> Face {
        let mut verts = self.verts.clone();
        verts.remove(j);
        Face { verts }
    }
}

/// Dimension of a complex. The void complex gets a distinguished sentinel
/// ordered below every finite dimension (numerically −2).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dim {
    Void,
    Finite(i64),
}

impl Dim {
    /// −2 for void, the dimension otherwise.
    pub fn as_int(self) -> i64 {
        match self {
            Dim::Void => -2,
            Dim::Finite(d) => d,
        }
    }

    pub fn is_void(self) -> bool {
        matches!(self, Dim::Void)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Void => write!(f, "void"),
            Dim::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Immutable finite abstract simplicial complex.
///
/// Stored as the canonical antichain of facets in lexicographic order.
/// Two distinct degenerate values exist: the void complex (no faces at all)
/// and the empty complex `{∅}` whose single facet is the empty face.
pub struct Complex {
    facets: Vec<Face>,
    labels: Vec<String>,
    face_cache: RwLock<HashMap<i64, Arc<Vec<Face>>>>,
}

impl Clone for Complex {
    fn clone(&self) -> Self {
        Complex {
            facets: self.facets.clone(),
            labels: self.labels.clone(),
            face_cache: RwLock::new(self.face_cache.read().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("facets", &self.labeled_facets())
            .finish()
    }
}

/// Equality as labeled complexes: same facet sets over the same vertex
/// tokens, independent of internal id assignment.
impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.labeled_facets() == other.labeled_facets()
    }
}

impl Eq for Complex {}

/// Removes duplicates and dominated faces, leaving the facet antichain.
fn antichain(faces: Vec<Face>) -> Vec<Face> {
    let set: BTreeSet<Face> = faces.into_iter().collect();
    let all: Vec<Face> = set.into_iter().collect();
    all.iter()
        .filter(|f| {
            !all.iter()
                .any(|g| g.verts.len() > f.verts.len() && f.is_subset_of(g))
        })
        .cloned()
        .collect()
}

impl Complex {
    /// The void complex: no faces at all, not even ∅.
    pub fn void() -> Self {
        Complex {
            facets: Vec::new(),
            labels: Vec::new(),
            face_cache: RwLock::new(HashMap::new()),
        }
    }

    /// The empty complex `{∅}`: a single facet, the empty face.
    pub fn empty_complex() -> Self {
        Complex {
            facets: vec![Face::empty()],
            labels: Vec::new(),
            face_cache: RwLock::new(HashMap::new()),
        }
    }

    /// Builds a canonical complex from raw facet token lists.
    ///
    /// Duplicate and dominated input faces are allowed and removed. Vertex
    /// ids are assigned densely in first-seen order of the tokens. An empty
    /// input yields the void complex.
    pub fn from_facets<S: AsRef<str>>(raw: &[Vec<S>]) -> Self {
        let mut labels: Vec<String> = Vec::new();
        let mut id_of: HashMap<String, VertexId> = HashMap::new();
        let mut faces: Vec<Face> = Vec::with_capacity(raw.len());
        for line in raw {
            let mut verts = Vec::with_capacity(line.len());
            for tok in line {
                let tok = tok.as_ref();
                let id = *id_of.entry(tok.to_string()).or_insert_with(|| {
                    labels.push(tok.to_string());
                    (labels.len() - 1) as VertexId
                });
                verts.push(id);
            }
            faces.push(Face::new(verts));
        }
        let facets = antichain(faces);
        // Domination never removes a token: a dominated face is contained in
        // a kept one, so every assigned id still occurs in some facet.
        Complex {
            facets,
            labels,
            face_cache: RwLock::new(HashMap::new()),
        }
    }

    /// Builds a complex from faces expressed in a parent complex's ids,
    /// renumbering the surviving vertices densely (ascending parent ids)
    /// and carrying their labels over.
    pub(crate) fn from_parent_faces(faces: Vec<Face>, parent_labels: &[String]) -> Self {
        let facets = antichain(faces);
        let used: BTreeSet<VertexId> = facets.iter().flat_map(|f| f.verts.iter().copied()).collect();
        let remap: HashMap<VertexId, VertexId> = used
            .iter()
            .enumerate()
            .map(|(new, old)| (*old, new as VertexId))
            .collect();
        let labels = used
            .iter()
            .map(|old| parent_labels[*old as usize].clone())
            .collect();
        let facets = facets
            .into_iter()
            .map(|f| Face {
                // ascending remap preserves sortedness
                verts: f.verts.iter().map(|v| remap[v]).collect(),
            })
            .collect();
        Complex {
            facets,
            labels,
            face_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True exactly for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    /// Max facet dimension; −1 for `{∅}`, the void sentinel for the void complex.
    pub fn dim(&self) -> Dim {
        match self.facets.iter().map(Face::dim).max() {
            None => Dim::Void,
            Some(d) => Dim::Finite(d),
        }
    }

    /// Dimension as an integer with the void complex at −2.
    pub fn dim_int(&self) -> i64 {
        self.dim().as_int()
    }

    /// All faces of dimension `i`, lexicographically sorted; memoized per
    /// dimension. Out-of-range `i` yields the empty list; `faces(−1)` is
    /// `{∅}` for every non-void complex.
    pub fn faces(&self, i: i64) -> Arc<Vec<Face>> {
        if self.is_void() || i < -1 || i > self.dim_int() {
            return Arc::new(Vec::new());
        }
        if let Some(hit) = self.face_cache.read().unwrap().get(&i) {
            return Arc::clone(hit);
        }
        let computed: Vec<Face> = if i == -1 {
            vec![Face::empty()]
        } else {
            let k = (i + 1) as usize;
            let mut set: BTreeSet<Face> = BTreeSet::new();
            for facet in &self.facets {
                if facet.verts.len() < k {
                    continue;
                }
                for combo in facet.verts.iter().copied().combinations(k) {
                    set.insert(Face { verts: combo });
                }
            }
            set.into_iter().collect()
        };
        let arc = Arc::new(computed);
        self.face_cache
            .write()
            .unwrap()
            .entry(i)
            .or_insert_with(|| Arc::clone(&arc));
        arc
    }

    /// Number of `i`-dimensional faces.
    pub fn face_count(&self, i: i64) -> usize {
        self.faces(i).len()
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        if f.is_empty() {
            return !self.is_void();
        }
        self.facets.iter().any(|g| f.is_subset_of(g))
    }

    /// The link of `sigma`: all faces disjoint from `sigma` whose union with
    /// it is a face. `link(∅) = K`; the link of a facet is `{∅}`.
    pub fn link(&self, sigma: &Face) -> Result<Complex> {
        if !self.contains_face(sigma) {
            return Err(Error::FaceNotInComplex(self.describe_face(sigma)));
        }
        let faces = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(f))
            .map(|f| f.difference(sigma))
            .collect();
        Ok(Complex::from_parent_faces(faces, &self.labels))
    }

    /// The pure `m`-skeleton: the subcomplex generated by all `m`-faces.
    pub fn pure_skeleton(&self, m: i64) -> Result<Complex> {
        self.check_skeleton_range(m)?;
        let faces = self.faces(m).as_ref().clone();
        Ok(Complex::from_parent_faces(faces, &self.labels))
    }

    /// The subcomplex generated by all facets of dimension at least `m`.
    pub fn facet_closure(&self, m: i64) -> Result<Complex> {
        self.check_skeleton_range(m)?;
        let faces = self
            .facets
            .iter()
            .filter(|f| f.dim() >= m)
            .cloned()
            .collect();
        Ok(Complex::from_parent_faces(faces, &self.labels))
    }

    fn check_skeleton_range(&self, m: i64) -> Result<()> {
        if m < 0 || m > self.dim_int() {
            return Err(Error::SkeletonOutOfRange {
                m,
                dim: self.dim_int(),
            });
        }
        Ok(())
    }

    /// True iff all facets share the top dimension (vacuously true for the
    /// void complex and `{∅}`).
    pub fn is_pure(&self) -> bool {
        let d = self.dim_int();
        self.facets.iter().all(|f| f.dim() == d)
    }

    /// The face's vertex tokens, in vertex-id order.
    pub fn face_labels(&self, f: &Face) -> Vec<String> {
        f.verts
            .iter()
            .map(|v| self.labels[*v as usize].clone())
            .collect()
    }

    /// Resolves a token list to a face of this complex's vertex set.
    /// Returns `None` if any token is unknown. Does not check membership.
    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Option<Face> {
        let mut verts = Vec::with_capacity(labels.len());
        for want in labels {
            let want = want.as_ref();
            let id = self.labels.iter().position(|l| l == want)?;
            verts.push(id as VertexId);
        }
        Some(Face::new(verts))
    }

    /// Canonical facet list as sorted label lists; the basis for equality.
    pub fn labeled_facets(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|f| {
                let mut l = self.face_labels(f);
                l.sort();
                l
            })
            .collect();
        out.sort();
        out
    }

    /// Label rendering that tolerates out-of-range ids (for error messages).
    pub(crate) fn describe_face(&self, f: &Face) -> String {
        f.verts
            .iter()
            .map(|v| {
                self.labels
                    .get(*v as usize)
                    .cloned()
                    .unwrap_or_else(|| format!("#{v}"))
            })
            .join(",")
    }
}
