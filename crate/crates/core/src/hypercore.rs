//! Incidence matrices, the property predicates, and the dual map.
//!
//! Row `i` is edge `i`; vertex `j` (1-based) is bit `j-1` of a row word.

use std::fmt;

use crate::error::{Error, Result};
use crate::RowConvention;

pub const MAX_WIDTH: usize = 64;

/// An `m x n` binary matrix; rows are edges, columns are vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    n: usize,
    rows: Vec<u64>,
}

pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl IncidenceMatrix {
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n == 0 || n > MAX_WIDTH {
            return Err(Error::InvalidArgument(format!("width {n} outside 1..={MAX_WIDTH}")));
        }
        if rows.len() > MAX_WIDTH {
            return Err(Error::InvalidArgument(format!("{} rows exceed {MAX_WIDTH}", rows.len())));
        }
        if let Some(r) = rows.iter().find(|&&r| r & !full_mask(n) != 0) {
            return Err(Error::InvalidArgument(format!("row {r:#b} wider than {n}")));
        }
        Ok(Self { n, rows })
    }

    /// Parses rows like `"10,01,11"`; the first character of each row is vertex 1.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let n = parts[0].len();
        let mut rows = Vec::with_capacity(parts.len());
        for p in &parts {
            if p.len() != n {
                return Err(Error::InvalidArgument(format!("ragged row `{p}`")));
            }
            let bits: Option<Vec<bool>> = p
                .chars()
                .map(|c| match c {
                    '0' => Some(false),
                    '1' => Some(true),
                    _ => None,
                })
                .collect();
            let bits = bits.ok_or_else(|| Error::InvalidArgument(format!("bad row `{p}`")))?;
            rows.push(canonical_row_code(&bits));
        }
        Self::new(n, rows)
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, edge: usize, vertex: usize) -> bool {
        self.rows[edge] >> vertex & 1 == 1
    }

    /// Column `vertex` (0-based) as a word whose bit `i` is row `i`.
    pub fn column(&self, vertex: usize) -> u64 {
        column_word(&self.rows, vertex)
    }

    /// The dual hypergraph's matrix. A matrix with no rows has no dual
    /// (its transpose would have zero width).
    pub fn transpose(&self) -> Result<Self> {
        let cols = (0..self.n).map(|j| self.column(j)).collect();
        Self::new(self.m(), cols)
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for j in 0..self.n {
                f.write_str(if r >> j & 1 == 1 { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

fn column_word(rows: &[u64], vertex: usize) -> u64 {
    rows.iter()
        .enumerate()
        .fold(0, |acc, (i, r)| acc | ((r >> vertex & 1) << i))
}

/// Bit `j-1` of the code is the membership of vertex `j`.
pub fn canonical_row_code(bits: &[bool]) -> u64 {
    assert!(bits.len() <= MAX_WIDTH, "row wider than a word");
    bits.iter()
        .enumerate()
        .fold(0, |acc, (j, &b)| acc | (u64::from(b) << j))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Uniformity {
    None,
    /// Every edge has exactly `k` vertices.
    Exact,
    /// Every edge has at most `k` vertices.
    AtMost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexDegree {
    None,
    /// Every vertex lies in exactly `k` edges.
    ExactCover,
    /// Every vertex lies in between 1 and `k` edges.
    AtMostCover,
}

/// Declarative description of a hypergraph class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub row_convention: RowConvention,
    pub forbid_empty_edges: bool,
    pub forbid_full_edges: bool,
    pub require_cover: bool,
    pub forbid_intersecting: bool,
    pub forbid_singular: bool,
    pub require_connected: bool,
    pub require_minimal_cover: bool,
    pub require_t0: bool,
    /// No two vertices with the same non-zero column. For graphs with
    /// loops this is exactly "no isolated loop-free edge".
    pub forbid_twin_vertices: bool,
    pub uniformity: Uniformity,
    pub vertex_degree: VertexDegree,
    pub k: Option<usize>,
}

impl ClassSpec {
    pub fn new(row_convention: RowConvention) -> Self {
        Self {
            row_convention,
            forbid_empty_edges: false,
            forbid_full_edges: false,
            require_cover: false,
            forbid_intersecting: false,
            forbid_singular: false,
            require_connected: false,
            require_minimal_cover: false,
            require_t0: false,
            forbid_twin_vertices: false,
            uniformity: Uniformity::None,
            vertex_degree: VertexDegree::None,
            k: None,
        }
    }

    pub fn no_empty(mut self) -> Self {
        self.forbid_empty_edges = true;
        self
    }

    pub fn no_full(mut self) -> Self {
        self.forbid_full_edges = true;
        self
    }

    pub fn cover(mut self) -> Self {
        self.require_cover = true;
        self
    }

    pub fn no_intersecting(mut self) -> Self {
        self.forbid_intersecting = true;
        self
    }

    pub fn no_singular(mut self) -> Self {
        self.forbid_singular = true;
        self.require_cover = true;
        self.forbid_intersecting = true;
        self
    }

    pub fn connected(mut self) -> Self {
        self.require_connected = true;
        self
    }

    pub fn minimal_cover(mut self) -> Self {
        self.require_minimal_cover = true;
        self.require_cover = true;
        self
    }

    pub fn t0(mut self) -> Self {
        self.require_t0 = true;
        self
    }

    pub fn no_twins(mut self) -> Self {
        self.forbid_twin_vertices = true;
        self
    }

    pub fn uniform(mut self, u: Uniformity) -> Self {
        self.uniformity = u;
        self
    }

    pub fn degree(mut self, d: VertexDegree) -> Self {
        self.vertex_degree = d;
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        if self.uniformity == Uniformity::Exact && k >= 1 {
            self.forbid_empty_edges = true;
        }
        self
    }

    pub fn with_convention(mut self, conv: RowConvention) -> Self {
        self.row_convention = conv;
        self
    }

    pub fn needs_k(&self) -> bool {
        self.uniformity != Uniformity::None || self.vertex_degree != VertexDegree::None
    }

    pub fn validate(&self) -> Result<()> {
        if self.require_minimal_cover && !self.require_cover {
            return Err(Error::InvalidSpec("minimal cover without cover".into()));
        }
        if self.forbid_singular && !(self.require_cover && self.forbid_intersecting) {
            return Err(Error::InvalidSpec("no singular vertices needs cover and no intersecting".into()));
        }
        if self.uniformity == Uniformity::Exact && self.k.is_some_and(|k| k >= 1) && !self.forbid_empty_edges {
            return Err(Error::InvalidSpec("k-uniform with k >= 1 must forbid empty edges".into()));
        }
        if self.needs_k() && self.k.is_none() {
            return Err(Error::MissingK(if self.uniformity != Uniformity::None {
                "uniformity"
            } else {
                "vertex_degree"
            }));
        }
        Ok(())
    }

    /// Prepares the predicates for matrices of width `n`.
    pub fn checker(&self, n: usize) -> Result<Checker> {
        self.validate()?;
        Ok(Checker {
            spec: self.clone(),
            n,
            full: full_mask(n),
            k: self.k.unwrap_or(0),
        })
    }
}

/// A [`ClassSpec`] bound to a width, for repeated checks of raw row words.
#[derive(Debug, Clone)]
pub struct Checker {
    spec: ClassSpec,
    n: usize,
    full: u64,
    k: usize,
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(len: usize) -> Self {
        Self { parent: (0..len).collect() }
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
            self.parent[rb] = ra;
        }
    }
}

fn is_connected(rows: &[u64], n: usize) -> bool {
    if n == 1 {
        return true;
    }
    let mut dsu = DisjointSet::new(n);
    for &r in rows {
        if r == 0 {
            continue;
        }
        let first = r.trailing_zeros() as usize;
        let mut rest = r & (r - 1);
        while rest != 0 {
            dsu.union(first, rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
    }
    let root = dsu.find(0);
    (1..n).all(|v| dsu.find(v) == root)
}

fn pairwise_distinct(mut words: Vec<u64>) -> bool {
    words.sort_unstable();
    words.windows(2).all(|w| w[0] != w[1])
}

impl Checker {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> &ClassSpec {
        &self.spec
    }

    /// Checks every enabled constraint; the row convention is not consulted.
    pub fn check(&self, rows: &[u64]) -> bool {
        let s = &self.spec;
        let (n, full, k) = (self.n, self.full, self.k);
        for &r in rows {
            if s.forbid_empty_edges && r == 0 {
                return false;
            }
            if s.forbid_full_edges && r == full {
                return false;
            }
            let w = r.count_ones() as usize;
            match s.uniformity {
                Uniformity::Exact if w != k => return false,
                Uniformity::AtMost if w > k => return false,
                _ => {}
            }
        }
        let union = rows.iter().fold(0, |a, r| a | r);
        let common = rows.iter().fold(full, |a, r| a & r);
        if s.require_cover && union != full {
            return false;
        }
        if s.forbid_intersecting && common != 0 {
            return false;
        }
        if s.forbid_singular && (common != 0 || union != full) {
            return false;
        }
        if s.require_minimal_cover {
            let mut once = 0u64;
            let mut twice = 0u64;
            for &r in rows {
                twice |= once & r;
                once |= r;
            }
            let private = once & !twice;
            if rows.iter().any(|r| r & private == 0) {
                return false;
            }
        }
        let needs_columns = s.require_t0 || s.forbid_twin_vertices || s.vertex_degree != VertexDegree::None;
        if needs_columns {
            let cols: Vec<u64> = (0..n).map(|j| column_word(rows, j)).collect();
            match s.vertex_degree {
                VertexDegree::ExactCover if cols.iter().any(|c| c.count_ones() as usize != k) => return false,
                VertexDegree::AtMostCover
                    if cols.iter().any(|c| *c == 0 || c.count_ones() as usize > k) =>
                {
                    return false
                }
                _ => {}
            }
            if s.require_t0 && !pairwise_distinct(cols.clone()) {
                return false;
            }
            if s.forbid_twin_vertices && !pairwise_distinct(cols.into_iter().filter(|&c| c != 0).collect()) {
                return false;
            }
        }
        if s.require_connected && !is_connected(rows, n) {
            return false;
        }
        true
    }
}

/// True iff `matrix` satisfies every enabled constraint of `spec`.
pub fn satisfies(matrix: &IncidenceMatrix, spec: &ClassSpec) -> Result<bool> {
    Ok(spec.checker(matrix.n())?.check(matrix.rows()))
}

pub fn transpose(matrix: &IncidenceMatrix) -> Result<IncidenceMatrix> {
    matrix.transpose()
}
