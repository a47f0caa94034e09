//! Planar standard Gale diagrams ("wheels") of polytopes with `d + 3`
//! vertices.
//!
//! A wheel has `k` diameters and `2k` symbolic rays in circular order; ray
//! `i` and ray `i + k` are antipodal. Only multiplicities and circular
//! positions are stored, so every predicate here is exact.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polytope::IncidencePolytope;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wheel {
    multiplicities: Vec<u32>,
}

impl Wheel {
    /// `multiplicities[i]` points on ray `i`; the length must be `2k` with
    /// `k >= 1`, and every diameter must carry at least one point.
    pub fn new(multiplicities: Vec<u32>) -> Result<Self> {
        let rays = multiplicities.len();
        if rays < 2 || !rays.is_multiple_of(2) {
            return Err(Error::MalformedWheel(format!(
                "need an even, positive number of rays, got {rays}"
            )));
        }
        let k = rays / 2;
        if let Some(i) = (0..k).find(|&i| multiplicities[i] + multiplicities[i + k] == 0) {
            return Err(Error::MalformedWheel(format!("diameter {i} is unused")));
        }
        Ok(Self { multiplicities })
    }

    pub fn num_diameters(&self) -> usize {
        self.multiplicities.len() / 2
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn num_points(&self) -> usize {
        self.multiplicities.iter().map(|&m| m as usize).sum()
    }

    /// Dimension of the polytope the wheel describes.
    pub fn dim(&self) -> usize {
        self.num_points().saturating_sub(3)
    }

    /// No two neighbouring occupied rays have both of their antipodal rays
    /// empty. Points on two such rays produce the same cofaces as if they
    /// sat on one ray, so only reduced wheels are enumerated.
    pub fn is_reduced(&self) -> bool {
        is_reduced(&self.multiplicities)
    }

    pub fn num_facets(&self) -> usize {
        count_facets(&self.multiplicities)
    }
}

/// Every open halfplane bounded by a line through the origin contains at
/// least two points. The tightest halfplanes are those bounded by a
/// diameter, which contain exactly `k - 1` consecutive rays.
pub fn wheel_is_polytopal(w: &Wheel) -> bool {
    is_polytopal(&w.multiplicities)
}

fn is_polytopal(m: &[u32]) -> bool {
    let rays = m.len();
    let k = rays / 2;
    if k < 2 {
        return false;
    }
    let mut window: u32 = m[1..k].iter().sum();
    for i in 0..rays {
        if window < 2 {
            return false;
        }
        // slide from rays i+1..i+k-1 to i+2..i+k
        window = window + m[(i + k) % rays] - m[(i + 1) % rays];
    }
    true
}

fn is_reduced(m: &[u32]) -> bool {
    let rays = m.len();
    let k = rays / 2;
    (0..rays).all(|i| {
        let j = (i + 1) % rays;
        !(m[i] > 0 && m[j] > 0 && m[(i + k) % rays] == 0 && m[(j + k) % rays] == 0)
    })
}

/// Three rays (sorted positions) whose circular gaps are all below a
/// half-turn, i.e. whose directions positively span the plane.
#[inline]
fn spanning_triple(a: usize, b: usize, c: usize, rays: usize) -> bool {
    let k = rays / 2;
    b - a < k && c - b < k && rays - (c - a) < k
}

fn count_facets(m: &[u32]) -> usize {
    let rays = m.len();
    let k = rays / 2;
    let occupied: Vec<usize> = (0..rays).filter(|&r| m[r] > 0).collect();
    let mut total: usize = (0..k).map(|i| (m[i] * m[i + k]) as usize).sum();
    for (x, &a) in occupied.iter().enumerate() {
        for (y, &b) in occupied.iter().enumerate().skip(x + 1) {
            for &c in &occupied[y + 1..] {
                if spanning_triple(a, b, c, rays) {
                    total += (m[a] * m[b] * m[c]) as usize;
                }
            }
        }
    }
    total
}

/// Gale reconstruction. Points are numbered ray by ray. Facets are the
/// complements of the minimal positively spanning point sets: one point
/// from each of two antipodal rays, or one point from each of three rays
/// that positively span the plane.
pub fn wheel_to_polytope(w: &Wheel) -> Result<IncidencePolytope> {
    if !wheel_is_polytopal(w) {
        return Err(Error::NotPolytopal);
    }
    let m = &w.multiplicities;
    let rays = m.len();
    let k = rays / 2;
    let n = w.num_points();
    let mut points: Vec<Vec<usize>> = Vec::with_capacity(rays);
    let mut next = 0;
    for &c in m {
        points.push((next..next + c as usize).collect());
        next += c as usize;
    }
    let all = VertexSet::full(n);
    let complement = |drop: &[usize]| {
        let mut f = all.clone();
        for &v in drop {
            f.remove(v);
        }
        f
    };
    let mut facets = Vec::with_capacity(count_facets(m));
    for i in 0..k {
        for &p in &points[i] {
            for &q in &points[i + k] {
                facets.push(complement(&[p, q]));
            }
        }
    }
    for a in 0..rays {
        for b in a + 1..rays {
            for c in b + 1..rays {
                if m[a] == 0 || m[b] == 0 || m[c] == 0 || !spanning_triple(a, b, c, rays) {
                    continue;
                }
                for &p in &points[a] {
                    for &q in &points[b] {
                        for &r in &points[c] {
                            facets.push(complement(&[p, q, r]));
                        }
                    }
                }
            }
        }
    }
    IncidencePolytope::new(n - 3, facets, n)
}

/// Smallest element of the dihedral orbit (rotations of the circular ray
/// sequence and reflections); every such map preserves antipodality.
fn is_orbit_minimum(m: &[u32]) -> bool {
    let rays = m.len();
    for s in 0..rays {
        let rotated = (0..rays).map(|j| m[(j + s) % rays]);
        if rotated.lt(m.iter().copied()) {
            return false;
        }
        let reflected = (0..rays).map(|j| m[(s + rays - j) % rays]);
        if reflected.lt(m.iter().copied()) {
            return false;
        }
    }
    true
}

/// Filters applied while generating.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WheelFilter {
    /// Discard wheels whose polytope would have more facets than this.
    pub max_facets: Option<usize>,
}

/// One work unit: the number of diameters and the multiplicities on the
/// first diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Unit {
    k: usize,
    first: (u32, u32),
}

fn units(n: usize) -> Vec<Unit> {
    let mut out = Vec::new();
    for k in 2..=n {
        for a in 0..=n as u32 {
            for b in 0..=(n as u32 - a) {
                if a + b >= 1 && b >= a {
                    out.push(Unit { k, first: (a, b) });
                }
            }
        }
    }
    out
}

struct Generator {
    rays: usize,
    k: usize,
    max_facets: usize,
    m: Vec<u32>,
    out: Vec<Wheel>,
}

impl Generator {
    /// Facets contributed by ray `r` together with already assigned rays
    /// (diameters `0..i`, the other ray of diameter `i` excluded).
    fn new_facets(&self, r: usize, assigned: usize) -> usize {
        let c = self.m[r] as usize;
        if c == 0 {
            return 0;
        }
        let k = self.k;
        let mut earlier: Vec<usize> = (0..assigned)
            .flat_map(|i| [i, i + k])
            .filter(|&x| self.m[x] > 0)
            .collect();
        earlier.sort_unstable();
        let mut total = 0;
        for (x, &a) in earlier.iter().enumerate() {
            for &b in &earlier[x + 1..] {
                let mut t = [a, b, r];
                t.sort_unstable();
                if spanning_triple(t[0], t[1], t[2], self.rays) {
                    total += c * (self.m[a] * self.m[b]) as usize;
                }
            }
        }
        total
    }

    fn run(&mut self, i: usize, left: u32, facets: usize) {
        let k = self.k;
        if i == k {
            if left == 0
                && is_reduced(&self.m)
                && is_polytopal(&self.m)
                && is_orbit_minimum(&self.m)
            {
                self.out.push(Wheel {
                    multiplicities: self.m.clone(),
                });
            }
            return;
        }
        // Every remaining diameter needs at least one point.
        let remaining = (k - i) as u32;
        if left < remaining {
            return;
        }
        let floor = self.m[0];
        for a in floor..=left {
            for b in floor..=(left - a) {
                if a + b == 0 || left - a - b < remaining - 1 {
                    continue;
                }
                self.m[i] = a;
                self.m[i + k] = b;
                let prev = i - 1;
                let (x, y) = (prev, i);
                let bad = |p: usize, q: usize, pa: usize, qa: usize, m: &[u32]| {
                    m[p] > 0 && m[q] > 0 && m[pa] == 0 && m[qa] == 0
                };
                if bad(x, y, x + k, y + k, &self.m) || bad(x + k, y + k, x, y, &self.m) {
                    continue;
                }
                let mut total = facets;
                if self.max_facets != usize::MAX {
                    total += (a * b) as usize + self.new_facets(i, i) + self.new_facets(i + k, i);
                    if total > self.max_facets {
                        continue;
                    }
                }
                self.run(i + 1, left - a - b, total);
            }
        }
        self.m[i] = 0;
        self.m[i + k] = 0;
    }
}

fn run_unit(n: usize, unit: Unit, filter: WheelFilter) -> Vec<Wheel> {
    let k = unit.k;
    let (a, b) = unit.first;
    let mut gen = Generator {
        rays: 2 * k,
        k,
        max_facets: filter.max_facets.unwrap_or(usize::MAX),
        m: vec![0; 2 * k],
        out: Vec::new(),
    };
    gen.m[0] = a;
    gen.m[k] = b;
    let facets = (a * b) as usize;
    if facets <= gen.max_facets {
        gen.run(1, n as u32 - a - b, facets);
    }
    gen.out
}

/// One reduced, polytopal wheel per dihedral class with `n` points,
/// i.e. one wheel per combinatorial type of non-pyramidal
/// `(n-3)`-polytope with `n` vertices. Parallel over work units on the
/// current rayon pool; the output order does not depend on the schedule.
pub fn enumerate_wheels_filtered(n: usize, filter: WheelFilter) -> Vec<Wheel> {
    if n < 5 {
        return Vec::new();
    }
    units(n)
        .into_par_iter()
        .map(|u| run_unit(n, u, filter))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn enumerate_wheels(n: usize) -> Vec<Wheel> {
    enumerate_wheels_filtered(n, WheelFilter::default())
}
