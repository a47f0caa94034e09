//! Canonical form of the two-sided vertex–facet incidence structure.
//!
//! Vertices and facets form the two colour classes of a bipartite graph.
//! The search individualizes vertices one at a time, refines to an
//! equitable ordered partition after each step, and keeps the smallest
//! incidence encoding seen at a discrete leaf. Automorphisms found along the
//! way prune sibling subtrees (orbit pruning) and cut whole subtrees that
//! are images of ones already explored (backjumping to the divergence
//! point with the first or the best leaf).

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::polytope::IncidencePolytope;
use crate::vertex_set::VertexSet;

/// Deterministic byte encoding of a combinatorial type.
///
/// Layout: `num_vertices`, `num_facets`, `dim` as little-endian `u32`, then
/// one row per facet in canonical order, each `ceil(num_vertices / 8)`
/// bytes with vertex `i` at bit `i % 8` of byte `i / 8`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s).map_err(|e| Error::MalformedKey(e.to_string()))?;
        let key = Self(bytes);
        key.header()?;
        Ok(key)
    }

    fn header(&self) -> Result<(usize, usize, usize)> {
        let b = &self.0;
        if b.len() < 12 {
            return Err(Error::MalformedKey("truncated header".into()));
        }
        let word = |i: usize| u32::from_le_bytes(b[i..i + 4].try_into().unwrap()) as usize;
        let (n, m, dim) = (word(0), word(4), word(8));
        if b.len() != 12 + m * n.div_ceil(8) {
            return Err(Error::MalformedKey("length does not match header".into()));
        }
        Ok((n, m, dim))
    }

    pub fn num_vertices(&self) -> usize {
        self.header().map(|h| h.0).unwrap_or(0)
    }

    /// Rebuilds the canonically labelled polytope the key describes.
    pub fn to_polytope(&self) -> Result<IncidencePolytope> {
        let (n, m, dim) = self.header()?;
        let row = n.div_ceil(8);
        let facets = (0..m)
            .map(|f| {
                let bytes = &self.0[12 + f * row..12 + (f + 1) * row];
                (0..n)
                    .filter(|&v| bytes[v / 8] & (1 << (v % 8)) != 0)
                    .collect::<VertexSet>()
            })
            .collect();
        IncidencePolytope::new(dim, facets, n)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_key(p: &IncidencePolytope) -> CanonicalKey {
    canonical_form(p).0
}

/// Canonical key together with the labelling that produces it:
/// `labels[v]` is the canonical index of vertex `v`.
pub fn canonical_form(p: &IncidencePolytope) -> (CanonicalKey, Vec<usize>) {
    let graph = Graph::new(p);
    let mut search = Search::new(&graph);
    let root = Partition::root(&graph);
    let mut path = Vec::new();
    search.dfs(&root, &mut path);
    let best = search.best.expect("search visits at least one leaf");

    let n = graph.n;
    let row = n.div_ceil(8);
    let mut bytes = Vec::with_capacity(12 + graph.m * row);
    for x in [n, graph.m, p.dim()] {
        bytes.extend_from_slice(&(x as u32).to_le_bytes());
    }
    let wpr = graph.words_per_row;
    for r in 0..graph.m {
        let words = &best.code[r * wpr..(r + 1) * wpr];
        let mut row_bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
        row_bytes.truncate(row);
        bytes.extend_from_slice(&row_bytes);
    }
    let mut labels = vec![0; n];
    for (position, &v) in best.lab.iter().enumerate() {
        labels[v as usize] = position;
    }
    (CanonicalKey(bytes), labels)
}

/// Bipartite incidence graph; elements `0..n` are vertices and `n..n+m`
/// are facets.
struct Graph {
    n: usize,
    m: usize,
    words_per_row: usize,
    adj_start: Vec<usize>,
    adj: Vec<u32>,
}

impl Graph {
    fn new(p: &IncidencePolytope) -> Self {
        let n = p.num_vertices();
        let m = p.num_facets();
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); n + m];
        for (f, set) in p.facets().iter().enumerate() {
            for v in set {
                lists[v].push((n + f) as u32);
                lists[n + f].push(v as u32);
            }
        }
        let mut adj_start = Vec::with_capacity(n + m + 1);
        let mut adj = Vec::new();
        adj_start.push(0);
        for l in lists {
            adj.extend(l);
            adj_start.push(adj.len());
        }
        Self {
            n,
            m,
            words_per_row: n.div_ceil(64).max(1),
            adj_start,
            adj,
        }
    }

    #[inline]
    fn neighbors(&self, x: usize) -> &[u32] {
        &self.adj[self.adj_start[x]..self.adj_start[x + 1]]
    }
}

/// Ordered partition of the elements; cells are contiguous runs of `lab`
/// and are identified by their start position.
#[derive(Clone)]
struct Partition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    cell: Vec<u32>,
    len: Vec<u32>,
}

struct Scratch {
    count: Vec<u32>,
    in_queue: Vec<bool>,
    touched: Vec<u32>,
}

impl Partition {
    fn root(g: &Graph) -> Self {
        let total = g.n + g.m;
        let mut p = Self {
            lab: (0..total as u32).collect(),
            pos: (0..total as u32).collect(),
            cell: (0..total)
                .map(|x| if x < g.n { 0 } else { g.n as u32 })
                .collect(),
            len: vec![0; total],
        };
        p.len[0] = g.n as u32;
        if g.m > 0 {
            p.len[g.n] = g.m as u32;
        }
        let mut scratch = Scratch::new(total);
        let mut queue = VecDeque::from([0]);
        if g.m > 0 {
            queue.push_back(g.n as u32);
        }
        p.refine(g, queue, &mut scratch);
        p
    }

    fn cell_len(&self, x: u32) -> u32 {
        self.len[self.cell[x as usize] as usize]
    }

    /// Start of the first non-singleton vertex cell.
    fn target_cell(&self, g: &Graph) -> Option<usize> {
        let mut p = 0;
        while p < g.n {
            let l = self.len[p] as usize;
            if l > 1 {
                return Some(p);
            }
            p += l;
        }
        None
    }

    /// Moves `v` to the front of its cell as a new singleton cell and
    /// returns the start of that cell.
    fn individualize(&mut self, v: u32) -> u32 {
        let s = self.cell[v as usize];
        let l = self.len[s as usize];
        let front = self.lab[s as usize];
        let pv = self.pos[v as usize];
        self.lab.swap(s as usize, pv as usize);
        self.pos[front as usize] = pv;
        self.pos[v as usize] = s;
        self.len[s as usize] = 1;
        self.len[s as usize + 1] = l - 1;
        for p in s + 1..s + l {
            self.cell[self.lab[p as usize] as usize] = s + 1;
        }
        s
    }

    fn refine(&mut self, g: &Graph, mut queue: VecDeque<u32>, sc: &mut Scratch) {
        for &w in &queue {
            sc.in_queue[w as usize] = true;
        }
        let mut starts: Vec<u32> = Vec::new();
        while let Some(w) = queue.pop_front() {
            sc.in_queue[w as usize] = false;
            let w = w as usize;
            sc.touched.clear();
            for p in w..w + self.len[w] as usize {
                let y = self.lab[p] as usize;
                for &x in g.neighbors(y) {
                    if sc.count[x as usize] == 0 {
                        sc.touched.push(x);
                    }
                    sc.count[x as usize] += 1;
                }
            }
            starts.clear();
            starts.extend(sc.touched.iter().map(|&x| self.cell[x as usize]));
            starts.sort_unstable();
            starts.dedup();
            for &s in &starts {
                let s = s as usize;
                let l = self.len[s] as usize;
                if l == 1 {
                    continue;
                }
                let count = &sc.count;
                let slice = &mut self.lab[s..s + l];
                slice.sort_unstable_by_key(|&x| count[x as usize]);
                if count[slice[0] as usize] == count[slice[l - 1] as usize] {
                    continue;
                }
                let mut start = s;
                for p in s..s + l {
                    let x = self.lab[p] as usize;
                    if p > s && count[x] != count[self.lab[p - 1] as usize] {
                        self.len[start] = (p - start) as u32;
                        if !sc.in_queue[start] {
                            sc.in_queue[start] = true;
                            queue.push_back(start as u32);
                        }
                        start = p;
                    }
                    self.cell[x] = start as u32;
                    self.pos[x] = p as u32;
                }
                self.len[start] = (s + l - start) as u32;
                if !sc.in_queue[start] {
                    sc.in_queue[start] = true;
                    queue.push_back(start as u32);
                }
            }
            for &x in &sc.touched {
                sc.count[x as usize] = 0;
            }
        }
    }
}

impl Scratch {
    fn new(total: usize) -> Self {
        Self {
            count: vec![0; total],
            in_queue: vec![false; total],
            touched: Vec::new(),
        }
    }
}

struct Leaf {
    code: Vec<u64>,
    /// Vertices in canonical order.
    lab: Vec<u32>,
    path: Vec<u32>,
}

struct Search<'g> {
    g: &'g Graph,
    scratch: Scratch,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u32>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Self {
            g,
            scratch: Scratch::new(g.n + g.m),
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    /// Returns `Some(level)` to abandon everything below the node at depth
    /// `level` and resume with that node's next child.
    fn dfs(&mut self, part: &Partition, path: &mut Vec<u32>) -> Option<usize> {
        let Some(s) = part.target_cell(self.g) else {
            return self.visit_leaf(part, path);
        };
        let level = path.len();
        let mut members: Vec<u32> = part.lab[s..s + part.len[s] as usize].to_vec();
        members.sort_unstable();
        let mut tried: Vec<u32> = Vec::new();
        let mut orbits: Option<(usize, Vec<u32>)> = None;
        for w in members {
            if !tried.is_empty() && !self.generators.is_empty() {
                let stale = orbits
                    .as_ref()
                    .is_none_or(|(k, _)| *k != self.generators.len());
                if stale {
                    orbits = Some((self.generators.len(), self.orbits_fixing(path)));
                }
                let (_, roots) = orbits.as_ref().unwrap();
                if tried
                    .iter()
                    .any(|&t| roots[t as usize] == roots[w as usize])
                {
                    continue;
                }
            }
            tried.push(w);
            let mut child = part.clone();
            let start = child.individualize(w);
            child.refine(self.g, VecDeque::from([start]), &mut self.scratch);
            path.push(w);
            let jump = self.dfs(&child, path);
            path.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, part: &Partition, path: &[u32]) -> Option<usize> {
        let g = self.g;
        let wpr = g.words_per_row;
        let mut code = vec![0u64; g.m * wpr];
        for r in 0..g.m {
            let facet = part.lab[g.n + r] as usize;
            for &v in g.neighbors(facet) {
                let label = part.pos[v as usize] as usize;
                code[r * wpr + label / 64] |= 1 << (label % 64);
            }
        }
        debug_assert!((0..g.n).all(|p| part.cell_len(part.lab[p]) == 1));
        let leaf = Leaf {
            code,
            lab: part.lab[..g.n].to_vec(),
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                code: leaf.code.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if first.code == leaf.code {
            let gen = automorphism(&first.lab, &leaf.lab);
            let j = divergence(&first.path, &leaf.path);
            self.generators.push(gen);
            return Some(j);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.code.cmp(&best.code) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let gen = automorphism(&best.lab, &leaf.lab);
                let j = divergence(&best.path, &leaf.path);
                self.generators.push(gen);
                Some(j)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Orbit representatives of the group generated by the known
    /// automorphisms that fix `path` pointwise.
    fn orbits_fixing(&self, path: &[u32]) -> Vec<u32> {
        let n = self.g.n;
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for gen in &self.generators {
            if path.iter().any(|&p| gen[p as usize] != p) {
                continue;
            }
            for x in 0..n as u32 {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gen[x as usize]));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        (0..n as u32).map(|x| find(&mut parent, x)).collect()
    }
}

/// Vertex permutation sending the leaf labelled `from` onto `to`.
fn automorphism(from: &[u32], to: &[u32]) -> Vec<u32> {
    let mut gen = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gen[a as usize] = b;
    }
    gen
}

fn divergence(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
