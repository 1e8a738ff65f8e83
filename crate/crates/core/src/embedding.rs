//! Binary labelings of graphs and the structure they expose: isometry
//! into the hypercube, daisy-cube structure, median closure, and induced
//! subcube enumeration.
//!
//! An [`EmbeddedGraph`] pairs a graph with one injective binary label per
//! vertex such that every edge joins labels at Hamming distance one.
//! Three labelings cover the built-in families:
//!
//! - the block encoding for Munarini graphs and stars
//!   ([`psi_labeling`]), sending each string to a length-kn binary word
//!   whose popcount equals the distance from the all-zero string;
//! - the identity labeling for the binary-labeled families
//!   ([`identity_labeling`]);
//! - the square-relation labeling for generalized Pell and Pell graphs
//!   ([`theta_labeling`]), which groups edges into parallel classes
//!   (opposite edges of any 4-cycle are parallel), assigns one coordinate
//!   per class, and reads labels off a breadth-first traversal.
//!
//! The whole-graph scans (isometry, median closure, cube enumeration) are
//! data-parallel across vertices; each has an always-sequential `_seq`
//! twin with identical output, which the benchmarks compare.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use crate::error::{Error, Result};
use crate::exec;
use crate::graphs::{self, Family, LabeledGraph};
use crate::strings::{self, BinaryLabel};

/// Fixed seed for sampled scans, so repeated runs agree by default.
pub const DEFAULT_SCAN_SEED: u64 = 1729;

/// Vertex count at or below which the default median scan is exhaustive.
pub const EXHAUSTIVE_TRIPLE_LIMIT: usize = 400;

/// Number of sampled triples in the default median scan.
pub const DEFAULT_TRIPLE_SAMPLE: usize = 100_000;

/// A witness that the labeling is not isometric: a vertex pair whose
/// graph distance differs from the Hamming distance of its labels.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IsometryViolation {
    pub u: usize,
    pub v: usize,
    pub graph_distance: usize,
    pub hamming_distance: usize,
}

impl IsometryViolation {
    pub fn into_error(self) -> Error {
        Error::NotIsometric {
            u: self.u,
            v: self.v,
            graph_distance: self.graph_distance,
            hamming_distance: self.hamming_distance,
        }
    }
}

/// A witness that the label set is not downward closed: clearing
/// `cleared_bit` in `label` leaves the vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DaisyViolation {
    pub label: BinaryLabel,
    pub cleared_bit: usize,
}

/// Outcome of the daisy-cube check on one labeling.
#[derive(Clone, Debug)]
pub struct DaisyReport {
    /// True when the label set is downward closed, which together with
    /// the isometry precondition certifies a daisy cube.
    pub is_daisy: bool,
    /// First closure violation in (vertex, bit) scan order, if any.
    pub witness: Option<DaisyViolation>,
    /// Labels maximal under the bitwise partial order, ascending.
    pub maximal_labels: Vec<BinaryLabel>,
}

/// A witness that the vertex set is not closed under majority labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MedianViolation {
    pub triple: (usize, usize, usize),
    pub majority: BinaryLabel,
}

/// How to scan vertex triples in the median-closure check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TripleScan {
    /// Every triple u < v < w.
    Exhaustive,
    /// `count` pseudo-random triples from a seeded generator.
    Sampled { count: usize, seed: u64 },
    /// Exhaustive up to `exhaustive_limit` vertices, sampled beyond.
    Auto {
        exhaustive_limit: usize,
        sample: usize,
        seed: u64,
    },
}

impl Default for TripleScan {
    fn default() -> Self {
        TripleScan::Auto {
            exhaustive_limit: EXHAUSTIVE_TRIPLE_LIMIT,
            sample: DEFAULT_TRIPLE_SAMPLE,
            seed: DEFAULT_SCAN_SEED,
        }
    }
}

/// An induced subcube: the vertices whose labels agree with the bottom
/// label outside `support` and range over all subsets of `support` on it.
/// `support` holds ascending bit positions; `top` is the vertex with all
/// of them set. Dimension-0 cubes (single vertices) are included.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct InducedCube {
    pub bottom: usize,
    pub top: usize,
    pub support: Vec<usize>,
}

impl InducedCube {
    pub fn dim(&self) -> usize {
        self.support.len()
    }
}

/// A graph with an injective binary labeling in which every edge joins
/// labels at Hamming distance one.
#[derive(Clone, Debug)]
pub struct EmbeddedGraph {
    graph: LabeledGraph,
    labels: Vec<BinaryLabel>,
    dim: usize,
    label_index: HashMap<BinaryLabel, usize>,
    /// Bit-packed labels for fast Hamming distances, when they fit.
    packed: Option<Vec<u128>>,
}

impl EmbeddedGraph {
    /// Validates that labels are uniform in length, one per vertex,
    /// injective, and at Hamming distance one across every edge.
    pub fn new(graph: LabeledGraph, labels: Vec<BinaryLabel>) -> Result<Self> {
        if labels.len() != graph.vertex_count() {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.vertex_count()
            )));
        }
        let dim = labels.first().map_or(0, BinaryLabel::len);
        for label in &labels {
            if label.len() != dim {
                return Err(Error::NonUniformLabels(dim, label.len()));
            }
        }
        let mut label_index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if let Some(first) = label_index.insert(label.clone(), i) {
                return Err(Error::DuplicateLabel(first, i));
            }
        }
        for &(u, v) in graph.edges() {
            let hamming = labels[u].hamming(&labels[v]);
            if hamming != 1 {
                return Err(Error::EdgeNotUnitDistance { u, v, hamming });
            }
        }
        let packed = (dim <= 128).then(|| labels.iter().map(pack).collect());
        Ok(Self {
            graph,
            labels,
            dim,
            label_index,
            packed,
        })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn labels(&self) -> &[BinaryLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &BinaryLabel {
        &self.labels[i]
    }

    /// Length of every label.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of_label(&self, label: &BinaryLabel) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// The vertex carrying the all-zero label, if present.
    pub fn zero_vertex(&self) -> Option<usize> {
        self.index_of_label(&BinaryLabel::zeros(self.dim))
    }

    /// Hamming distance between two vertices' labels.
    pub fn hamming(&self, i: usize, j: usize) -> usize {
        match &self.packed {
            Some(packed) => (packed[i] ^ packed[j]).count_ones() as usize,
            None => self.labels[i].hamming(&self.labels[j]),
        }
    }

    // -- isometry ------------------------------------------------------

    /// First vertex pair (by source, then target index) whose graph
    /// distance differs from the label Hamming distance, or `None` when
    /// the embedding is isometric. Scans sources in parallel.
    pub fn isometry_violation(&self) -> Option<IsometryViolation> {
        exec::find_map_first(self.vertex_count(), |u| self.isometry_violation_from(u))
    }

    /// Sequential twin of [`Self::isometry_violation`].
    pub fn isometry_violation_seq(&self) -> Option<IsometryViolation> {
        (0..self.vertex_count()).find_map(|u| self.isometry_violation_from(u))
    }

    fn isometry_violation_from(&self, u: usize) -> Option<IsometryViolation> {
        let dist = self.graph.bfs_distances(u);
        (0..self.vertex_count()).find_map(|v| {
            let hamming_distance = self.hamming(u, v);
            (dist[v] != hamming_distance).then(|| IsometryViolation {
                u,
                v,
                graph_distance: dist[v],
                hamming_distance,
            })
        })
    }

    // -- daisy structure -------------------------------------------------

    /// Checks the daisy-cube property of this labeling: the embedding
    /// must be isometric (returned as an error otherwise), and the label
    /// set is tested for downward closure under clearing single bits.
    /// The report also lists the maximal labels, which name the maximal
    /// induced subcubes when the check succeeds.
    pub fn check_daisy(&self) -> Result<DaisyReport> {
        if let Some(violation) = self.isometry_violation() {
            return Err(violation.into_error());
        }
        let witness = self.labels.iter().find_map(|label| {
            label.support().into_iter().find_map(|bit| {
                let cleared = label.with_bit(bit, false);
                (!self.label_index.contains_key(&cleared)).then(|| DaisyViolation {
                    label: label.clone(),
                    cleared_bit: bit,
                })
            })
        });
        Ok(DaisyReport {
            is_daisy: witness.is_none(),
            witness,
            maximal_labels: self.maximal_labels(),
        })
    }

    /// Labels maximal under the bitwise partial order, in ascending label
    /// order. Works whether or not the set is downward closed: candidates
    /// are scanned in descending weight against the maximal set found so
    /// far, so any strict dominator is seen first.
    fn maximal_labels(&self) -> Vec<BinaryLabel> {
        let mut by_weight: Vec<&BinaryLabel> = self.labels.iter().collect();
        by_weight.sort_by_key(|l| std::cmp::Reverse(l.weight()));
        let mut maximal: Vec<&BinaryLabel> = Vec::new();
        for label in by_weight {
            if !maximal.iter().any(|m| label.le(m)) {
                maximal.push(label);
            }
        }
        let mut out: Vec<BinaryLabel> = maximal.into_iter().cloned().collect();
        out.sort();
        out
    }

    // -- medians ---------------------------------------------------------

    /// The median of a vertex triple: the vertex whose label takes the
    /// bitwise majority. For an isometric embedding this vertex lies on a
    /// shortest path between each pair, and no other vertex does.
    pub fn median(&self, u: usize, v: usize, w: usize) -> Result<usize> {
        let majority = BinaryLabel::majority(&self.labels[u], &self.labels[v], &self.labels[w]);
        self.index_of_label(&majority)
            .ok_or(Error::MedianNotVertex(u, v, w))
    }

    /// Searches for a triple whose majority label is not a vertex,
    /// parallelizing over the first triple member. `None` means the scan
    /// found the vertex set closed under majorities — for an isometric
    /// embedding, exactly the median-graph property. Sampled scans are
    /// evidence, not proof.
    pub fn median_violation(&self, scan: TripleScan) -> Option<MedianViolation> {
        match self.resolve_scan(scan) {
            TripleScan::Sampled { count, seed } => self.median_violation_sampled(count, seed),
            _ => exec::find_map_first(self.vertex_count(), |u| {
                self.median_violation_from(u)
            }),
        }
    }

    /// Sequential twin of [`Self::median_violation`].
    pub fn median_violation_seq(&self, scan: TripleScan) -> Option<MedianViolation> {
        match self.resolve_scan(scan) {
            TripleScan::Sampled { count, seed } => self.median_violation_sampled(count, seed),
            _ => (0..self.vertex_count()).find_map(|u| self.median_violation_from(u)),
        }
    }

    fn resolve_scan(&self, scan: TripleScan) -> TripleScan {
        match scan {
            TripleScan::Auto {
                exhaustive_limit,
                sample,
                seed,
            } => {
                if self.vertex_count() <= exhaustive_limit {
                    TripleScan::Exhaustive
                } else {
                    TripleScan::Sampled {
                        count: sample,
                        seed,
                    }
                }
            }
            other => other,
        }
    }

    fn median_violation_from(&self, u: usize) -> Option<MedianViolation> {
        let n = self.vertex_count();
        (u + 1..n).find_map(|v| {
            (v + 1..n).find_map(|w| self.majority_missing(u, v, w))
        })
    }

    fn median_violation_sampled(&self, count: usize, seed: u64) -> Option<MedianViolation> {
        let n = self.vertex_count();
        if n < 3 {
            return None;
        }
        let mut rng = StdRng::seed_from_u64(seed);
        let mut found = 0usize;
        while found < count {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            let w = rng.random_range(0..n);
            if u == v || v == w || u == w {
                continue;
            }
            found += 1;
            if let Some(violation) = self.majority_missing(u, v, w) {
                return Some(violation);
            }
        }
        None
    }

    fn majority_missing(&self, u: usize, v: usize, w: usize) -> Option<MedianViolation> {
        let majority = BinaryLabel::majority(&self.labels[u], &self.labels[v], &self.labels[w]);
        (!self.label_index.contains_key(&majority)).then(|| MedianViolation {
            triple: (u, v, w),
            majority,
        })
    }

    // -- induced cubes ---------------------------------------------------

    /// Enumerates every induced subcube, sorted by (dimension, bottom
    /// vertex index, support). A subcube is accepted only if all its
    /// 2^p labeled corners are vertices *and* every unit-distance corner
    /// pair is an actual edge, so the result is correct for non-isometric
    /// labelings too. Bottoms are scanned in parallel.
    pub fn enumerate_cubes(&self) -> Vec<InducedCube> {
        let per_bottom = exec::map_indices(self.vertex_count(), |b| self.cubes_from_bottom(b));
        Self::sorted_cubes(per_bottom)
    }

    /// Sequential twin of [`Self::enumerate_cubes`].
    pub fn enumerate_cubes_seq(&self) -> Vec<InducedCube> {
        let per_bottom: Vec<Vec<InducedCube>> = (0..self.vertex_count())
            .map(|b| self.cubes_from_bottom(b))
            .collect();
        Self::sorted_cubes(per_bottom)
    }

    fn sorted_cubes(per_bottom: Vec<Vec<InducedCube>>) -> Vec<InducedCube> {
        let mut cubes: Vec<InducedCube> = per_bottom.into_iter().flatten().collect();
        cubes.sort_by(|a, b| {
            (a.dim(), a.bottom, &a.support).cmp(&(b.dim(), b.bottom, &b.support))
        });
        cubes
    }

    fn cubes_from_bottom(&self, bottom: usize) -> Vec<InducedCube> {
        let mut out = Vec::new();
        let mut vertices = vec![bottom];
        let mut support = Vec::new();
        self.extend_cube(bottom, 0, &mut support, &mut vertices, &mut out);
        out
    }

    /// Depth-first extension of the cube (bottom, support) by directions
    /// `>= next`, emitting the current cube first. `vertices` lists the
    /// cube's members, doubling per direction; the vertex added last
    /// carries the full support and is the top.
    fn extend_cube(
        &self,
        bottom: usize,
        next: usize,
        support: &mut Vec<usize>,
        vertices: &mut Vec<usize>,
        out: &mut Vec<InducedCube>,
    ) {
        out.push(InducedCube {
            bottom,
            top: *vertices.last().expect("cube is nonempty"),
            support: support.clone(),
        });
        for d in next..self.dim {
            if self.labels[bottom].bit(d) {
                continue;
            }
            let mut partners = Vec::with_capacity(vertices.len());
            let complete = vertices.iter().all(|&x| {
                let lifted = self.labels[x].with_bit(d, true);
                match self.label_index.get(&lifted) {
                    Some(&y) if self.graph.has_edge(x, y) => {
                        partners.push(y);
                        true
                    }
                    _ => false,
                }
            });
            if complete {
                let base_len = vertices.len();
                vertices.extend(partners);
                support.push(d);
                self.extend_cube(bottom, d + 1, support, vertices, out);
                support.pop();
                vertices.truncate(base_len);
            }
        }
    }

    /// The cubes not contained in any larger cube, in the same order as
    /// [`Self::enumerate_cubes`]. A cube is maximal exactly when no
    /// one-dimension-higher cube contains it; the candidates extend the
    /// support by one direction, lowering the bottom when that direction
    /// is set in its label.
    pub fn enumerate_maximal_cubes(&self) -> Vec<InducedCube> {
        let cubes = self.enumerate_cubes();
        let present: HashSet<(usize, &[usize])> = cubes
            .iter()
            .map(|c| (c.bottom, c.support.as_slice()))
            .collect();
        let is_maximal = |cube: &InducedCube| -> bool {
            for d in 0..self.dim {
                if cube.support.contains(&d) {
                    continue;
                }
                let parent_bottom = if self.labels[cube.bottom].bit(d) {
                    match self.index_of_label(&self.labels[cube.bottom].with_bit(d, false)) {
                        Some(b) => b,
                        None => continue,
                    }
                } else {
                    cube.bottom
                };
                let mut parent_support = cube.support.clone();
                let at = parent_support.partition_point(|&s| s < d);
                parent_support.insert(at, d);
                if present.contains(&(parent_bottom, parent_support.as_slice())) {
                    return false;
                }
            }
            true
        };
        let keep: Vec<bool> = exec::map_indices(cubes.len(), |i| is_maximal(&cubes[i]));
        cubes
            .into_iter()
            .zip(keep)
            .filter_map(|(cube, k)| k.then_some(cube))
            .collect()
    }

    // -- censuses ----------------------------------------------------------

    /// Number of induced cubes of each dimension; index p holds the
    /// p-cube count, and index 0 the vertex count.
    pub fn cube_census(&self) -> Vec<u64> {
        Self::census_by_dim(&self.enumerate_cubes())
    }

    /// Number of maximal cubes of each dimension.
    pub fn maximal_cube_census(&self) -> Vec<u64> {
        Self::census_by_dim(&self.enumerate_maximal_cubes())
    }

    fn census_by_dim(cubes: &[InducedCube]) -> Vec<u64> {
        let top = cubes.iter().map(InducedCube::dim).max().unwrap_or(0);
        let mut census = vec![0u64; top + 1];
        for cube in cubes {
            census[cube.dim()] += 1;
        }
        census
    }

    /// Counts induced cubes by (dimension, graph distance from `origin`
    /// to the cube's bottom vertex).
    pub fn distance_cube_census(&self, origin: usize) -> BTreeMap<(usize, usize), u64> {
        let dist = self.graph.bfs_distances(origin);
        let mut census = BTreeMap::new();
        for cube in self.enumerate_cubes() {
            *census.entry((cube.dim(), dist[cube.bottom])).or_insert(0) += 1;
        }
        census
    }

    /// Vertex counts by label weight; index d holds the number of labels
    /// with d ones.
    pub fn weight_histogram(&self) -> Vec<u64> {
        let mut histogram = vec![0u64; self.dim + 1];
        for label in &self.labels {
            histogram[label.weight()] += 1;
        }
        while histogram.last() == Some(&0) && histogram.len() > 1 {
            histogram.pop();
        }
        histogram
    }
}

fn pack(label: &BinaryLabel) -> u128 {
    label
        .bits()
        .iter()
        .enumerate()
        .fold(0u128, |acc, (i, &b)| if b { acc | 1 << i } else { acc })
}

/// Labels a Munarini graph (or star) through the block encoding of its
/// vertex strings; the label weight equals the distance from the all-zero
/// string.
pub fn psi_labeling(graph: LabeledGraph) -> Result<EmbeddedGraph> {
    if !matches!(graph.family(), Family::Munarini | Family::Star) {
        return Err(Error::UnsupportedParameter(format!(
            "block-encoding labels apply to munarini or star graphs, got '{}'",
            graph.family()
        )));
    }
    let labels = graph
        .labels()
        .iter()
        .map(|l| {
            let s = l.as_pell().expect("string-labeled family");
            strings::encode_psi(s).into_label()
        })
        .collect();
    EmbeddedGraph::new(graph, labels)
}

/// Builds the Munarini graph of the given order and arity and labels it
/// with the block encoding.
pub fn munarini_psi(n: usize, k: u8) -> Result<EmbeddedGraph> {
    psi_labeling(graphs::build_munarini(n, k)?)
}

/// Uses the binary vertex labels of a Fibonacci cube or hypercube
/// directly.
pub fn identity_labeling(graph: LabeledGraph) -> Result<EmbeddedGraph> {
    let labels = graph
        .labels()
        .iter()
        .map(|l| {
            l.as_binary().cloned().ok_or_else(|| {
                Error::UnsupportedParameter(
                    "identity labeling requires binary vertex labels".into(),
                )
            })
        })
        .collect::<Result<Vec<BinaryLabel>>>()?;
    EmbeddedGraph::new(graph, labels)
}

/// Minimal union-find for grouping parallel edges.
struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Attach the larger root id below the smaller, so each
            // class's root is its smallest member.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Labels a graph by its square relation: opposite edges of every
/// 4-cycle are declared parallel, the transitive classes each receive a
/// coordinate (numbered by smallest edge), and labels follow a
/// breadth-first traversal from `origin`, toggling one coordinate per
/// edge. Fails if the classes assign inconsistent labels or the result
/// is not isometric — on generalized Pell and Pell graphs it always
/// succeeds.
pub fn theta_labeling(graph: LabeledGraph, origin: usize) -> Result<EmbeddedGraph> {
    let edges = graph.edges();
    let edge_id = |u: usize, v: usize| -> usize {
        let key = if u < v { (u, v) } else { (v, u) };
        edges.binary_search(&key).expect("edge exists")
    };
    let mut sets = DisjointSets::new(edges.len());
    for u in 0..graph.vertex_count() {
        let nbrs = graph.neighbors(u);
        for (i, &v) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                // Common neighbors x != u close a square u-v-x-w.
                for x in sorted_intersection(graph.neighbors(v), graph.neighbors(w)) {
                    if x == u {
                        continue;
                    }
                    sets.union(edge_id(u, v), edge_id(w, x));
                    sets.union(edge_id(u, w), edge_id(v, x));
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; edges.len()];
    let mut next_class = 0usize;
    let mut class_by_root: HashMap<usize, usize> = HashMap::new();
    for id in 0..edges.len() {
        let root = sets.find(id);
        let class = *class_by_root.entry(root).or_insert_with(|| {
            let c = next_class;
            next_class += 1;
            c
        });
        class_of[id] = class;
    }
    let dim = next_class;

    let mut labels: Vec<Option<BinaryLabel>> = vec![None; graph.vertex_count()];
    labels[origin] = Some(BinaryLabel::zeros(dim));
    let mut queue = std::collections::VecDeque::from([origin]);
    while let Some(u) = queue.pop_front() {
        let current = labels[u].clone().expect("labeled before queueing");
        for &v in graph.neighbors(u) {
            let class = class_of[edge_id(u, v)];
            let candidate = current.with_bit(class, !current.bit(class));
            match &labels[v] {
                None => {
                    labels[v] = Some(candidate);
                    queue.push_back(v);
                }
                Some(existing) if *existing != candidate => {
                    return Err(Error::Internal(format!(
                        "parallel classes label vertex {v} inconsistently"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let labels: Vec<BinaryLabel> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or(Error::UnknownVertex(i.to_string())))
        .collect::<Result<_>>()?;
    let embedded = EmbeddedGraph::new(graph, labels)?;
    if let Some(violation) = embedded.isometry_violation() {
        return Err(violation.into_error());
    }
    Ok(embedded)
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// The default labeling for each family: block encoding for Munarini
/// graphs and stars, identity for the binary families, square-relation
/// labels (from the all-zero string) for generalized Pell and Pell
/// graphs.
pub fn auto_labeling(graph: LabeledGraph) -> Result<EmbeddedGraph> {
    match graph.family() {
        Family::Munarini | Family::Star => psi_labeling(graph),
        Family::FibonacciCube | Family::Hypercube => identity_labeling(graph),
        Family::GeneralizedPell | Family::PellGraph => theta_labeling(graph, 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly;
    use num_bigint::BigInt;

    fn census_as_bigints(census: &[u64]) -> Vec<BigInt> {
        census.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn poly_coeffs(p: &poly::IntPoly, len: usize) -> Vec<BigInt> {
        (0..len).map(|i| p.coeff(i)).collect()
    }

    #[test]
    fn psi_labeling_of_small_graph() {
        let e = munarini_psi(2, 3).unwrap();
        assert_eq!(e.dim(), 6);
        assert_eq!(e.vertex_count(), 10);
        assert!(e.isometry_violation().is_none());
        assert!(e.isometry_violation_seq().is_none());
        // Label weight equals graph distance from the all-zero vertex.
        let zero = e.zero_vertex().unwrap();
        assert_eq!(zero, 0);
        let dist = e.graph().bfs_distances(zero);
        for v in 0..e.vertex_count() {
            assert_eq!(dist[v], e.label(v).weight());
        }
    }

    #[test]
    fn psi_isometric_small_sweep() {
        for k in 1..=3u8 {
            for n in 0..=4usize {
                let e = munarini_psi(n, k).unwrap();
                assert!(e.isometry_violation().is_none(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn daisy_structure_of_munarini_graphs() {
        let e = munarini_psi(2, 3).unwrap();
        let report = e.check_daisy().unwrap();
        assert!(report.is_daisy);
        assert!(report.witness.is_none());
        // Maximal labels are the encodings of the zero-free strings.
        let mut expected: Vec<BinaryLabel> = strings::enumerate_maximal_strings(2, 3)
            .unwrap()
            .iter()
            .map(|s| strings::encode_psi(s).into_label())
            .collect();
        expected.sort();
        assert_eq!(report.maximal_labels, expected);
        for k in 2..=3u8 {
            for n in 0..=4usize {
                let report = munarini_psi(n, k).unwrap().check_daisy().unwrap();
                assert!(report.is_daisy, "n={n} k={k}");
                assert_eq!(
                    report.maximal_labels.len(),
                    strings::enumerate_maximal_strings(n, k).unwrap().len()
                );
            }
        }
    }

    #[test]
    fn cube_censuses_match_polynomials() {
        let e = munarini_psi(2, 3).unwrap();
        let census = e.cube_census();
        assert_eq!(
            census_as_bigints(&census),
            poly_coeffs(&poly::cube_poly(2, 3), census.len())
        );
        assert_eq!(census, [10, 13, 4]);
        let maximal = e.maximal_cube_census();
        assert_eq!(maximal, [0, 1, 4]);
        assert_eq!(
            census_as_bigints(&maximal),
            poly_coeffs(&poly::maximal_cube_poly(2, 3).unwrap(), maximal.len())
        );
        let weights = e.weight_histogram();
        assert_eq!(weights, [1, 5, 4]);
        let dcensus = e.distance_cube_census(e.zero_vertex().unwrap());
        let expected: Vec<((usize, usize), u64)> = vec![
            ((0, 0), 1),
            ((0, 1), 5),
            ((0, 2), 4),
            ((1, 0), 5),
            ((1, 1), 8),
            ((2, 0), 4),
        ];
        let got: Vec<((usize, usize), u64)> = dcensus.into_iter().collect();
        assert_eq!(got, expected);
        // Against the bivariate polynomial, (x exponent, q exponent).
        let d = poly::distance_cube_poly(2, 3);
        for ((p, dist), count) in &got {
            assert_eq!(d.coeff(*p, *dist), BigInt::from(*count));
        }
    }

    #[test]
    fn hypercube_is_daisy_and_median() {
        let q3 = identity_labeling(graphs::build_hypercube(3).unwrap()).unwrap();
        assert!(q3.isometry_violation().is_none());
        assert_eq!(q3.cube_census(), [8, 12, 6, 1]);
        assert_eq!(q3.maximal_cube_census(), [0, 0, 0, 1]);
        let report = q3.check_daisy().unwrap();
        assert!(report.is_daisy);
        assert_eq!(report.maximal_labels.len(), 1);
        assert_eq!(report.maximal_labels[0].to_string(), "111");
        assert!(q3.median_violation(TripleScan::Exhaustive).is_none());
        assert!(q3
            .median_violation_seq(TripleScan::Exhaustive)
            .is_none());
        let m = q3.median(1, 2, 4).unwrap(); // 001, 010, 100 -> 000
        assert_eq!(m, 0);
    }

    #[test]
    fn fibonacci_cube_is_median() {
        let f4 = identity_labeling(graphs::build_fibonacci_cube(4).unwrap()).unwrap();
        assert!(f4.isometry_violation().is_none());
        assert!(f4.median_violation(TripleScan::Exhaustive).is_none());
        let report = f4.check_daisy().unwrap();
        assert!(report.is_daisy);
    }

    #[test]
    fn munarini_graphs_are_median() {
        for k in 1..=3u8 {
            for n in 0..=3usize {
                let e = munarini_psi(n, k).unwrap();
                assert!(
                    e.median_violation(TripleScan::Exhaustive).is_none(),
                    "n={n} k={k}"
                );
            }
        }
    }

    /// Six-cycle with an isometric labeling: every pair of labels is at
    /// Hamming distance equal to the cycle distance, yet the majority
    /// label of alternating vertices is missing — so isometric does not
    /// imply median.
    #[test]
    fn isometric_six_cycle_is_not_median() {
        let doc = r#"{"family":"hypercube","n":3,"k":1,
            "vertices":["000","100","110","111","011","001"],
            "edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]}"#;
        let graph = LabeledGraph::from_json(doc).unwrap();
        let e = identity_labeling(graph).unwrap();
        assert!(e.isometry_violation().is_none());
        let violation = e.median_violation(TripleScan::Exhaustive).unwrap();
        assert_eq!(violation.triple, (0, 2, 4));
        assert_eq!(violation.majority.to_string(), "010");
        assert_eq!(
            e.median_violation_seq(TripleScan::Exhaustive),
            Some(violation.clone())
        );
        assert!(matches!(
            e.median(0, 2, 4),
            Err(Error::MedianNotVertex(0, 2, 4))
        ));
        // The daisy check refuses nothing here (isometric), but the label
        // set is not downward closed: 110 loses bit 0 to 010, absent.
        let report = e.check_daisy().unwrap();
        assert!(!report.is_daisy);
        let witness = report.witness.unwrap();
        assert_eq!(witness.label.to_string(), "110");
    }

    /// The same cycle labeled with the binary reflected code ordering
    /// that walks 010 instead of 111: edges stay unit distance but the
    /// embedding stops being isometric.
    #[test]
    fn mislabeled_six_cycle_is_not_isometric() {
        let doc = r#"{"family":"hypercube","n":3,"k":1,
            "vertices":["000","100","110","010","011","001"],
            "edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]}"#;
        let graph = LabeledGraph::from_json(doc).unwrap();
        let e = identity_labeling(graph).unwrap();
        let violation = e.isometry_violation().unwrap();
        assert_eq!((violation.u, violation.v), (0, 3));
        assert_eq!(violation.graph_distance, 3);
        assert_eq!(violation.hamming_distance, 1);
        assert_eq!(e.isometry_violation_seq(), Some(violation));
        assert!(e.check_daisy().is_err());
    }

    #[test]
    fn embedding_construction_rejections() {
        let graph = graphs::build_hypercube(2).unwrap();
        let bad_len = vec![
            BinaryLabel::parse("00").unwrap(),
            BinaryLabel::parse("011").unwrap(),
            BinaryLabel::parse("10").unwrap(),
            BinaryLabel::parse("11").unwrap(),
        ];
        assert!(matches!(
            EmbeddedGraph::new(graph.clone(), bad_len),
            Err(Error::NonUniformLabels(2, 3))
        ));
        let dup = vec![
            BinaryLabel::parse("00").unwrap(),
            BinaryLabel::parse("01").unwrap(),
            BinaryLabel::parse("01").unwrap(),
            BinaryLabel::parse("11").unwrap(),
        ];
        assert!(matches!(
            EmbeddedGraph::new(graph.clone(), dup),
            Err(Error::DuplicateLabel(1, 2))
        ));
        let far = vec![
            BinaryLabel::parse("00").unwrap(),
            BinaryLabel::parse("01").unwrap(),
            BinaryLabel::parse("11").unwrap(),
            BinaryLabel::parse("10").unwrap(),
        ];
        // Edge (0, 2) now joins 00 and 11 at Hamming distance 2.
        assert!(matches!(
            EmbeddedGraph::new(graph.clone(), far),
            Err(Error::EdgeNotUnitDistance { hamming: 2, .. })
        ));
        let short = vec![BinaryLabel::parse("00").unwrap()];
        assert!(matches!(
            EmbeddedGraph::new(graph, short),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn theta_labeling_of_pell_graphs() {
        let e = theta_labeling(graphs::build_generalized_pell(2, 3).unwrap(), 0).unwrap();
        assert_eq!(e.dim(), 5);
        assert!(e.isometry_violation().is_none());
        // Munarini and generalized Pell graphs share cube and maximal
        // cube counts at equal parameters.
        let m = munarini_psi(2, 3).unwrap();
        assert_eq!(e.cube_census(), m.cube_census());
        assert_eq!(e.maximal_cube_census(), m.maximal_cube_census());
        for n in 0..=4usize {
            let p = theta_labeling(graphs::build_pell(n).unwrap(), 0).unwrap();
            assert!(p.isometry_violation().is_none(), "n={n}");
            let census = p.cube_census();
            assert_eq!(
                census_as_bigints(&census),
                poly_coeffs(&poly::cube_poly(n, 2), census.len()),
                "n={n}"
            );
        }
    }

    #[test]
    fn theta_census_is_origin_independent() {
        let g = graphs::build_generalized_pell(2, 3).unwrap();
        let a = theta_labeling(g.clone(), 0).unwrap();
        let b = theta_labeling(g, 3).unwrap();
        assert_eq!(a.cube_census(), b.cube_census());
        assert_eq!(a.maximal_cube_census(), b.maximal_cube_census());
    }

    #[test]
    fn cube_enumeration_order_and_content() {
        let q2 = identity_labeling(graphs::build_hypercube(2).unwrap()).unwrap();
        let cubes = q2.enumerate_cubes();
        let shapes: Vec<(usize, usize, Vec<usize>)> = cubes
            .iter()
            .map(|c| (c.dim(), c.bottom, c.support.clone()))
            .collect();
        assert_eq!(
            shapes,
            vec![
                (0, 0, vec![]),
                (0, 1, vec![]),
                (0, 2, vec![]),
                (0, 3, vec![]),
                (1, 0, vec![0]),
                (1, 0, vec![1]),
                (1, 1, vec![0]),
                (1, 2, vec![1]),
                (2, 0, vec![0, 1]),
            ]
        );
        // Labels are most-significant-bit first: vertex 1 is "01", and
        // setting bit 0 gives "11" = vertex 3.
        assert_eq!(cubes[6].top, 3);
        assert_eq!(q2.enumerate_cubes_seq(), cubes);
        let maximal = q2.enumerate_maximal_cubes();
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].support, vec![0, 1]);
        assert_eq!(maximal[0].bottom, 0);
        assert_eq!(maximal[0].top, 3);
    }

    #[test]
    fn sampled_median_scan_is_deterministic() {
        let e = munarini_psi(3, 2).unwrap();
        let scan = TripleScan::Sampled {
            count: 2_000,
            seed: DEFAULT_SCAN_SEED,
        };
        assert_eq!(e.median_violation(scan), e.median_violation(scan));
        assert!(e.median_violation(scan).is_none());
        // Auto resolves to exhaustive for small graphs.
        assert!(e.median_violation(TripleScan::default()).is_none());
    }

    #[test]
    fn auto_labeling_dispatch() {
        assert_eq!(
            auto_labeling(graphs::build_munarini(2, 3).unwrap())
                .unwrap()
                .dim(),
            6
        );
        assert_eq!(
            auto_labeling(graphs::build_fibonacci_cube(4).unwrap())
                .unwrap()
                .dim(),
            4
        );
        assert_eq!(
            auto_labeling(graphs::build_pell(2).unwrap()).unwrap().dim(),
            3
        );
        assert_eq!(
            auto_labeling(graphs::build_star(5).unwrap()).unwrap().dim(),
            5
        );
        // Identity labels refuse string-labeled graphs and vice versa.
        assert!(identity_labeling(graphs::build_munarini(2, 2).unwrap()).is_err());
        assert!(psi_labeling(graphs::build_hypercube(2).unwrap()).is_err());
    }

    #[test]
    fn large_weight_histogram_matches_weight_poly() {
        let e = munarini_psi(5, 2).unwrap();
        let histogram = e.weight_histogram();
        assert_eq!(
            census_as_bigints(&histogram),
            poly_coeffs(&poly::weight_poly(5, 2), histogram.len())
        );
    }
}
