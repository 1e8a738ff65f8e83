//! Graph construction for the string families, plus structural
//! decompositions, verified isomorphisms, and serialization.
//!
//! All builders work the same way: enumerate the vertex strings in
//! lexicographic order, index them in a hash map, and generate each
//! vertex's neighbor *candidates* by applying the family's rewrite rules
//! positionwise. A candidate that is not itself a valid vertex string
//! simply misses the index, so the validity filter and the adjacency
//! relation stay in one place. Candidate generation over the vertices is
//! data-parallel; results are collected into an ordered edge set, so the
//! output is identical with and without the `parallel` feature.
//!
//! Vertex indices always follow lexicographic label order, and edge lists
//! are sorted pairs `(u, v)` with `u < v`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::poly;
use crate::strings::{self, BinaryLabel, PellString};

/// The graph families the crate can build.
///
/// - `Munarini`: strings of length n over `{0..k}` whose maximal runs of
///   k have even length; edges replace `0 <-> i` (0 < i < k) in one
///   position or `00 <-> kk` in two adjacent positions.
/// - `GeneralizedPell` (k >= 2): same vertex strings; edges replace
///   `i <-> i+1` (i <= k-2) in one position or `(k-1)(k-1) <-> kk` in two
///   adjacent positions.
/// - `FibonacciCube`: binary strings without consecutive ones, edges at
///   Hamming distance one. Isomorphic to `Munarini` at k = 1 with the
///   order shifted by one.
/// - `PellGraph`: the k = 2 generalized Pell graph under its own name.
/// - `Hypercube`: all binary strings, edges at Hamming distance one.
/// - `Star`: the order-1 Munarini graph, a star with k - 1 leaves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Munarini,
    GeneralizedPell,
    FibonacciCube,
    PellGraph,
    Hypercube,
    Star,
}

impl Family {
    pub fn id(self) -> &'static str {
        match self {
            Family::Munarini => "munarini",
            Family::GeneralizedPell => "genpell",
            Family::FibonacciCube => "fibonacci",
            Family::PellGraph => "pell",
            Family::Hypercube => "hypercube",
            Family::Star => "star",
        }
    }

    /// Families whose arity is fixed by definition.
    pub fn fixed_arity(self) -> Option<u8> {
        match self {
            Family::FibonacciCube | Family::Hypercube => Some(1),
            Family::PellGraph => Some(2),
            _ => None,
        }
    }

    /// True for the families labeled by raw binary strings rather than
    /// generalized Pell strings.
    pub fn binary_labeled(self) -> bool {
        matches!(self, Family::FibonacciCube | Family::Hypercube)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "munarini" => Ok(Family::Munarini),
            "genpell" => Ok(Family::GeneralizedPell),
            "fibonacci" => Ok(Family::FibonacciCube),
            "pell" => Ok(Family::PellGraph),
            "hypercube" => Ok(Family::Hypercube),
            "star" => Ok(Family::Star),
            other => Err(Error::UnsupportedParameter(format!(
                "unknown family '{other}' (expected munarini, genpell, fibonacci, pell, hypercube, or star)"
            ))),
        }
    }
}

/// Family together with the order n and arity k that select one member.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyParams {
    pub family: Family,
    pub n: usize,
    pub k: u8,
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}_{}", self.family, self.n, self.k)
    }
}

/// A vertex label: a generalized Pell string for the string families, a
/// raw binary word for the cube families.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum VertexLabel {
    Pell(PellString),
    Binary(BinaryLabel),
}

impl VertexLabel {
    pub fn as_pell(&self) -> Option<&PellString> {
        match self {
            VertexLabel::Pell(s) => Some(s),
            VertexLabel::Binary(_) => None,
        }
    }

    pub fn as_binary(&self) -> Option<&BinaryLabel> {
        match self {
            VertexLabel::Binary(b) => Some(b),
            VertexLabel::Pell(_) => None,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Pell(s) => s.fmt(f),
            VertexLabel::Binary(b) => b.fmt(f),
        }
    }
}

/// An undirected graph over labeled vertices. Vertex indices follow
/// lexicographic label order; `edges` holds sorted index pairs in
/// ascending order and the adjacency lists are ascending as well.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    params: FamilyParams,
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl LabeledGraph {
    fn from_parts(
        params: FamilyParams,
        labels: Vec<VertexLabel>,
        edge_set: BTreeSet<(usize, usize)>,
    ) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let edges: Vec<(usize, usize)> = edge_set.into_iter().collect();
        let mut adj = vec![Vec::new(); labels.len()];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Self {
            params,
            labels,
            index,
            adj,
            edges,
        }
    }

    pub fn params(&self) -> FamilyParams {
        self.params
    }

    pub fn family(&self) -> Family {
        self.params.family
    }

    pub fn order(&self) -> usize {
        self.params.n
    }

    pub fn arity(&self) -> u8 {
        self.params.k
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &VertexLabel {
        &self.labels[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertex_index(&self, label: &VertexLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn vertex_index_of_pell(&self, s: &PellString) -> Option<usize> {
        self.vertex_index(&VertexLabel::Pell(s.clone()))
    }

    pub fn vertex_index_of_binary(&self, b: &BinaryLabel) -> Option<usize> {
        self.vertex_index(&VertexLabel::Binary(b.clone()))
    }

    /// BFS distances from a source vertex; unreachable vertices hold
    /// `usize::MAX`.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.labels.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn bfs_distances_from_label(&self, label: &VertexLabel) -> Result<Vec<usize>> {
        let src = self
            .vertex_index(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))?;
        Ok(self.bfs_distances(src))
    }

    pub fn is_connected(&self) -> bool {
        self.labels.is_empty() || !self.bfs_distances(0).contains(&usize::MAX)
    }

    /// BFS two-coloring over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.labels.len()];
        for start in 0..self.labels.len() {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Shared generate-and-match edge construction: `candidates` writes each
/// neighbor candidate of one vertex into a scratch buffer of symbol
/// vectors.
fn build_string_graph<F>(params: FamilyParams, vertices: Vec<PellString>, candidates: F) -> LabeledGraph
where
    F: Fn(&[u8], &mut Vec<Vec<u8>>) + Sync,
{
    let lookup: HashMap<&[u8], usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, s)| (s.symbols(), i))
        .collect();
    let per_vertex: Vec<Vec<(usize, usize)>> = exec::map_indices(vertices.len(), |u| {
        let mut scratch: Vec<Vec<u8>> = Vec::new();
        candidates(vertices[u].symbols(), &mut scratch);
        scratch
            .iter()
            .filter_map(|cand| lookup.get(cand.as_slice()).map(|&v| ordered(u, v)))
            .collect()
    });
    let edge_set: BTreeSet<(usize, usize)> = per_vertex.into_iter().flatten().collect();
    drop(lookup);
    let labels = vertices.into_iter().map(VertexLabel::Pell).collect();
    LabeledGraph::from_parts(params, labels, edge_set)
}

/// Munarini graph of order n and arity k: one-position rewrites
/// `0 <-> i` for 0 < i < k and adjacent-pair rewrites `00 <-> kk`,
/// restricted to valid vertex strings.
pub fn build_munarini(n: usize, k: u8) -> Result<LabeledGraph> {
    let vertices = strings::enumerate_pell_strings(n, k)?;
    let params = FamilyParams {
        family: Family::Munarini,
        n,
        k,
    };
    Ok(build_string_graph(params, vertices, move |sym, out| {
        for p in 0..sym.len() {
            match sym[p] {
                0 => {
                    for i in 1..k {
                        let mut cand = sym.to_vec();
                        cand[p] = i;
                        out.push(cand);
                    }
                }
                c if c < k => {
                    let mut cand = sym.to_vec();
                    cand[p] = 0;
                    out.push(cand);
                }
                _ => {}
            }
        }
        for p in 0..sym.len().saturating_sub(1) {
            if sym[p] == 0 && sym[p + 1] == 0 {
                let mut cand = sym.to_vec();
                cand[p] = k;
                cand[p + 1] = k;
                out.push(cand);
            } else if sym[p] == k && sym[p + 1] == k {
                let mut cand = sym.to_vec();
                cand[p] = 0;
                cand[p + 1] = 0;
                out.push(cand);
            }
        }
    }))
}

/// Generalized Pell graph of order n and arity k >= 2: one-position
/// rewrites `i <-> i+1` for i <= k-2 and adjacent-pair rewrites
/// `(k-1)(k-1) <-> kk`, restricted to valid vertex strings.
pub fn build_generalized_pell(n: usize, k: u8) -> Result<LabeledGraph> {
    if k < 2 {
        return Err(Error::UnsupportedParameter(
            "generalized Pell graphs are defined for arity >= 2".into(),
        ));
    }
    let vertices = strings::enumerate_pell_strings(n, k)?;
    let params = FamilyParams {
        family: Family::GeneralizedPell,
        n,
        k,
    };
    Ok(build_string_graph(params, vertices, move |sym, out| {
        for p in 0..sym.len() {
            let c = sym[p];
            if c < k - 1 {
                let mut cand = sym.to_vec();
                cand[p] = c + 1;
                out.push(cand);
            }
            if c >= 1 && c <= k - 1 {
                let mut cand = sym.to_vec();
                cand[p] = c - 1;
                out.push(cand);
            }
        }
        for p in 0..sym.len().saturating_sub(1) {
            if sym[p] == k - 1 && sym[p + 1] == k - 1 {
                let mut cand = sym.to_vec();
                cand[p] = k;
                cand[p + 1] = k;
                out.push(cand);
            } else if sym[p] == k && sym[p + 1] == k {
                let mut cand = sym.to_vec();
                cand[p] = k - 1;
                cand[p + 1] = k - 1;
                out.push(cand);
            }
        }
    }))
}

/// The Pell graph: the arity-2 generalized Pell graph under its own
/// family tag.
pub fn build_pell(n: usize) -> Result<LabeledGraph> {
    let mut g = build_generalized_pell(n, 2)?;
    g.params.family = Family::PellGraph;
    Ok(g)
}

/// The star with k - 1 leaves, i.e. the order-1 Munarini graph.
pub fn build_star(k: u8) -> Result<LabeledGraph> {
    let mut g = build_munarini(1, k)?;
    g.params.family = Family::Star;
    Ok(g)
}

const MAX_BINARY_ORDER: usize = 60;

fn enumerate_binary(n: usize, no_consecutive_ones: bool) -> Result<Vec<BinaryLabel>> {
    if n > MAX_BINARY_ORDER {
        return Err(Error::UnsupportedParameter(format!(
            "binary enumeration is limited to n <= {MAX_BINARY_ORDER}"
        )));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if no_consecutive_ones && mask & (mask >> 1) != 0 {
            continue;
        }
        // Most-significant bit first, so numeric order is lexicographic.
        let bits: Vec<bool> = (0..n).map(|p| mask >> (n - 1 - p) & 1 == 1).collect();
        out.push(BinaryLabel::new(bits));
    }
    Ok(out)
}

fn build_binary_graph(family: Family, n: usize, no_consecutive_ones: bool) -> Result<LabeledGraph> {
    let vertices = enumerate_binary(n, no_consecutive_ones)?;
    let lookup: HashMap<&BinaryLabel, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let per_vertex: Vec<Vec<(usize, usize)>> = exec::map_indices(vertices.len(), |u| {
        let mut out = Vec::new();
        for p in 0..n {
            let cand = vertices[u].with_bit(p, !vertices[u].bit(p));
            if let Some(&v) = lookup.get(&cand) {
                out.push(ordered(u, v));
            }
        }
        out
    });
    let edge_set: BTreeSet<(usize, usize)> = per_vertex.into_iter().flatten().collect();
    drop(lookup);
    let labels = vertices.into_iter().map(VertexLabel::Binary).collect();
    let params = FamilyParams { family, n, k: 1 };
    Ok(LabeledGraph::from_parts(params, labels, edge_set))
}

/// Fibonacci cube: binary strings of length n with no consecutive ones,
/// edges at Hamming distance one.
pub fn build_fibonacci_cube(n: usize) -> Result<LabeledGraph> {
    build_binary_graph(Family::FibonacciCube, n, true)
}

/// Hypercube: all binary strings of length n, edges at Hamming distance
/// one.
pub fn build_hypercube(n: usize) -> Result<LabeledGraph> {
    build_binary_graph(Family::Hypercube, n, false)
}

/// Builds any family member, validating the (n, k) parameters against the
/// family's definition.
pub fn build_family(family: Family, n: usize, k: u8) -> Result<LabeledGraph> {
    if let Some(fixed) = family.fixed_arity() {
        if k != fixed {
            return Err(Error::UnsupportedParameter(format!(
                "family '{family}' has fixed arity {fixed}, got {k}"
            )));
        }
    }
    match family {
        Family::Munarini => build_munarini(n, k),
        Family::GeneralizedPell => build_generalized_pell(n, k),
        Family::FibonacciCube => build_fibonacci_cube(n),
        Family::PellGraph => build_pell(n),
        Family::Hypercube => build_hypercube(n),
        Family::Star => {
            if n != 1 {
                return Err(Error::UnsupportedParameter(format!(
                    "family 'star' has fixed order 1, got {n}"
                )));
            }
            build_star(k)
        }
    }
}

/// Number of vertices the family member will have, computable without
/// building it.
pub fn vertex_count_formula(family: Family, n: usize, k: u8) -> BigInt {
    match family {
        Family::Munarini | Family::GeneralizedPell | Family::PellGraph | Family::Star => {
            poly::fib_k(n + 1, k)
        }
        Family::FibonacciCube => poly::fib_k(n + 2, 1),
        Family::Hypercube => BigInt::from(1u8) << n,
    }
}

/// Edge count of the Munarini graph by the closed form
/// `((k^2-k+2) n F(n+1) + (k-2)(n+1) F(n)) / (k^2 + 4)`; the division is
/// checked to be exact. The k = 2 case also counts the Pell graph's
/// edges.
pub fn count_edges_closed_form(n: usize, k: u8) -> Result<BigInt> {
    let kk = k as i64;
    let numerator = BigInt::from(kk * kk - kk + 2) * BigInt::from(n as i64) * poly::fib_k(n + 1, k)
        + BigInt::from(kk - 2) * BigInt::from(n as i64 + 1) * poly::fib_k(n, k);
    let denominator = BigInt::from(kk * kk + 4);
    let (quotient, remainder) = num_integer_div_rem(&numerator, &denominator);
    if !remainder.is_zero() {
        return Err(Error::Internal(format!(
            "edge count closed form is not an integer for n={n}, k={k}"
        )));
    }
    Ok(quotient)
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// The recursive structure of a Munarini graph of order n >= 2: vertices
/// grouped by leading symbol c < k (each group inducing the order n-1
/// graph) plus the leading-kk group (inducing the order n-2 graph), with
/// all cross edges classified. The only cross edges run from group 0 to
/// each group 0 < c < k (one per shared suffix) and from group 0 to the
/// kk group (an induced matching `00t <-> kkt`).
#[derive(Clone, Debug)]
pub struct MunariniDecomposition {
    /// Vertex indices whose label starts with symbol c, for c < k.
    pub prefix_parts: Vec<Vec<usize>>,
    /// Vertex indices whose label starts with kk.
    pub kk_part: Vec<usize>,
    /// The cross edges between group 0 and the kk group, as
    /// (zero-side, kk-side) pairs; they form an induced matching.
    pub matching: Vec<(usize, usize)>,
    /// Cross-edge counts keyed by group pair (a, b) with a < b, where
    /// group k stands for the kk group. Only present when nonzero.
    pub cross_edges: BTreeMap<(usize, usize), usize>,
    /// Edge counts inside each group: index c < k for the prefix groups,
    /// index k for the kk group.
    pub internal_edges: Vec<usize>,
}

/// Splits a Munarini graph along leading symbols. Defined for n >= 2 so
/// that the kk group exists (it may still be empty only when k = 0,
/// which the builder already rejects).
pub fn decompose_munarini(g: &LabeledGraph) -> Result<MunariniDecomposition> {
    if g.family() != Family::Munarini {
        return Err(Error::UnsupportedParameter(format!(
            "decomposition applies to the munarini family, got '{}'",
            g.family()
        )));
    }
    if g.order() < 2 {
        return Err(Error::UnsupportedParameter(
            "decomposition is defined for order n >= 2".into(),
        ));
    }
    let k = g.arity() as usize;
    let part_of = |i: usize| -> usize {
        let s = g.label(i).as_pell().expect("munarini labels are strings");
        s.symbols()[0] as usize
    };
    let mut prefix_parts = vec![Vec::new(); k];
    let mut kk_part = Vec::new();
    for i in 0..g.vertex_count() {
        let c = part_of(i);
        if c < k {
            prefix_parts[c].push(i);
        } else {
            kk_part.push(i);
        }
    }
    let mut matching = Vec::new();
    let mut cross_edges = BTreeMap::new();
    let mut internal_edges = vec![0usize; k + 1];
    for &(u, v) in g.edges() {
        let (a, b) = (part_of(u), part_of(v));
        if a == b {
            internal_edges[a] += 1;
        } else {
            let key = (a.min(b), a.max(b));
            *cross_edges.entry(key).or_insert(0) += 1;
            if key == (0, k) {
                // Edge order puts the lexicographically smaller
                // (zero-leading) endpoint first already.
                matching.push((u, v));
            }
        }
    }
    Ok(MunariniDecomposition {
        prefix_parts,
        kk_part,
        matching,
        cross_edges,
        internal_edges,
    })
}

/// An isomorphism checked at construction time: `forward` is verified to
/// be a bijection taking every domain edge to a codomain edge, with equal
/// edge counts on both sides.
#[derive(Clone, Debug)]
pub struct VerifiedIsomorphism {
    pub domain: LabeledGraph,
    pub codomain: LabeledGraph,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

impl VerifiedIsomorphism {
    fn checked(domain: LabeledGraph, codomain: LabeledGraph, forward: Vec<usize>) -> Result<Self> {
        if forward.len() != domain.vertex_count()
            || domain.vertex_count() != codomain.vertex_count()
        {
            return Err(Error::Internal("isomorphism is not a bijection".into()));
        }
        let mut backward = vec![usize::MAX; forward.len()];
        for (u, &fu) in forward.iter().enumerate() {
            if fu >= backward.len() || backward[fu] != usize::MAX {
                return Err(Error::Internal("isomorphism is not a bijection".into()));
            }
            backward[fu] = u;
        }
        if domain.edge_count() != codomain.edge_count() {
            return Err(Error::Internal(format!(
                "edge counts differ: {} vs {}",
                domain.edge_count(),
                codomain.edge_count()
            )));
        }
        for &(u, v) in domain.edges() {
            if !codomain.has_edge(forward[u], forward[v]) {
                return Err(Error::Internal(format!(
                    "edge ({u}, {v}) is not preserved"
                )));
            }
        }
        Ok(Self {
            domain,
            codomain,
            forward,
            backward,
        })
    }

    /// Image of a domain vertex, as a label.
    pub fn forward_label(&self, u: usize) -> &VertexLabel {
        self.codomain.label(self.forward[u])
    }
}

/// Rewrites an arity-1 string blockwise (`0 -> 0`, `11 -> 10`) and drops
/// the final character, producing a binary word with no consecutive ones.
fn fold_to_fibonacci(s: &PellString) -> BinaryLabel {
    let sym = s.symbols();
    let mut bits = Vec::with_capacity(sym.len());
    let mut i = 0;
    while i < sym.len() {
        if sym[i] == 0 {
            bits.push(false);
            i += 1;
        } else {
            bits.push(true);
            bits.push(false);
            i += 2;
        }
    }
    bits.pop();
    BinaryLabel::new(bits)
}

/// The order-shifting isomorphism from the arity-1 Munarini graph of
/// order n >= 1 onto the Fibonacci cube of dimension n - 1.
pub fn iso_to_fibonacci(n: usize) -> Result<VerifiedIsomorphism> {
    if n == 0 {
        return Err(Error::UnsupportedParameter(
            "the order-0 graph has no Fibonacci cube counterpart".into(),
        ));
    }
    let domain = build_munarini(n, 1)?;
    let codomain = build_fibonacci_cube(n - 1)?;
    let forward = domain
        .labels()
        .iter()
        .map(|l| {
            let image = fold_to_fibonacci(l.as_pell().expect("string labels"));
            codomain
                .vertex_index_of_binary(&image)
                .ok_or_else(|| Error::Internal(format!("image {image} is not a vertex")))
        })
        .collect::<Result<Vec<usize>>>()?;
    VerifiedIsomorphism::checked(domain, codomain, forward)
}

/// Swaps the symbols 0 and 1, fixing 2; takes the arity-2 Munarini
/// adjacency rules onto the Pell graph's.
fn swap01(s: &PellString) -> PellString {
    let symbols = s
        .symbols()
        .iter()
        .map(|&c| match c {
            0 => 1,
            1 => 0,
            other => other,
        })
        .collect();
    PellString::new(symbols, s.arity()).expect("swap preserves validity")
}

/// The symbol-swap isomorphism from the arity-2 Munarini graph onto the
/// Pell graph of the same order.
pub fn iso_to_pell(n: usize) -> Result<VerifiedIsomorphism> {
    let domain = build_munarini(n, 2)?;
    let codomain = build_pell(n)?;
    let forward = domain
        .labels()
        .iter()
        .map(|l| {
            let image = swap01(l.as_pell().expect("string labels"));
            codomain
                .vertex_index_of_pell(&image)
                .ok_or_else(|| Error::Internal(format!("image {image} is not a vertex")))
        })
        .collect::<Result<Vec<usize>>>()?;
    VerifiedIsomorphism::checked(domain, codomain, forward)
}

// ---------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------

/// JSON document shape: family id, parameters, vertex labels in index
/// order, and sorted edge index pairs.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    family: String,
    n: usize,
    k: u8,
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl LabeledGraph {
    /// One `u v` line per edge, ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Graphviz form: all vertices (quoted labels), then all edges.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph {} {{\n", self.params);
        for label in &self.labels {
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.labels[u], self.labels[v]
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            family: self.params.family.id().to_string(),
            n: self.params.n,
            k: self.params.k,
            vertices: self.labels.iter().map(|l| l.to_string()).collect(),
            edges: self.edges.clone(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("graph serialization");
        text.push('\n');
        text
    }

    /// Parses and structurally validates a JSON graph document: known
    /// family, parameters consistent with it, every label a valid vertex
    /// string of the declared shape, no duplicate labels, and edges that
    /// are in-range, loop-free index pairs (normalized to sorted order).
    /// Whether the edges match the family's adjacency rules is a semantic
    /// question left to the verification layer.
    pub fn from_json(text: &str) -> Result<LabeledGraph> {
        let doc: GraphDoc = serde_json::from_str(text)
            .map_err(|e| Error::InvalidGraph(format!("malformed graph document: {e}")))?;
        let family = Family::from_str(&doc.family)?;
        if let Some(fixed) = family.fixed_arity() {
            if doc.k != fixed {
                return Err(Error::InvalidGraph(format!(
                    "family '{family}' has fixed arity {fixed}, document says {}",
                    doc.k
                )));
            }
        }
        if family == Family::Star && doc.n != 1 {
            return Err(Error::InvalidGraph(format!(
                "family 'star' has fixed order 1, document says {}",
                doc.n
            )));
        }
        let mut labels = Vec::with_capacity(doc.vertices.len());
        for text in &doc.vertices {
            let label = if family.binary_labeled() {
                VertexLabel::Binary(BinaryLabel::parse(text)?)
            } else {
                VertexLabel::Pell(PellString::parse(text, doc.k)?)
            };
            let len = match &label {
                VertexLabel::Pell(s) => s.len(),
                VertexLabel::Binary(b) => b.len(),
            };
            if len != doc.n {
                return Err(Error::NonUniformLabels(doc.n, len));
            }
            labels.push(label);
        }
        let mut seen: HashMap<&VertexLabel, usize> = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if let Some(&first) = seen.get(label) {
                return Err(Error::DuplicateLabel(first, i));
            }
            seen.insert(label, i);
        }
        drop(seen);
        let mut edge_set = BTreeSet::new();
        for &(u, v) in &doc.edges {
            if u >= labels.len() || v >= labels.len() {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{}",
                    labels.len()
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            edge_set.insert(ordered(u, v));
        }
        let params = FamilyParams {
            family,
            n: doc.n,
            k: doc.k,
        };
        Ok(LabeledGraph::from_parts(params, labels, edge_set))
    }
}
