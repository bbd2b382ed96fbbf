#![allow(dead_code)]

use kleinmaps::perm::Permutation;
use kleinmaps::{BladeSystem, TriangleSignature};
use rand::seq::SliceRandom;
use rand::Rng;

pub struct UnionFind {
    parent: Vec<usize>,
    // Parity of the path to the parent, for two-colouring.
    parity: Vec<bool>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    pub fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] ^= p;
        (root, self.parity[x])
    }

    /// Joins with the constraint `colour(a) ^ colour(b) == differ`;
    /// returns false when that contradicts earlier constraints.
    pub fn union(&mut self, a: usize, b: usize, differ: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return (pa ^ pb) == differ;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ differ;
        true
    }

    pub fn components(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x).0 == x)
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleSurface {
    pub euler: i64,
    pub orientable: bool,
    pub boundary: usize,
    pub genus_or_crosscaps: usize,
}

/// Builds the flag complex: every blade is a triangle whose corners have
/// types 0, 1, 2, side `s` lies opposite corner `s` and is glued to the same
/// side of `g_s(b)`, or is a boundary edge when `g_s(b) = b`. Counts cells,
/// orients triangles by signed union-find and traces the boundary graph.
pub fn cw_oracle(b: &BladeSystem) -> OracleSurface {
    let n = b.len();
    let gens: Vec<&Permutation> = b.generators().to_vec();

    // Corner (blade, t) is identified across every side containing it,
    // i.e. every side s != t.
    let mut corners = UnionFind::new(3 * n);
    for blade in 0..n {
        for t in 0..3 {
            for (s, g) in gens.iter().enumerate() {
                if s != t {
                    corners.union(3 * blade + t, 3 * g.apply(blade) + t, false);
                }
            }
        }
    }
    let vertices = corners.components();

    let mut edges = 0;
    let mut boundary_edges = Vec::new();
    for (s, g) in gens.iter().enumerate() {
        for blade in 0..n {
            let other = g.apply(blade);
            if other == blade {
                edges += 1;
                boundary_edges.push((blade, s));
            } else if blade < other {
                edges += 1;
            }
        }
    }
    let euler = vertices as i64 - edges as i64 + n as i64;

    // Corner types match across each gluing, so the two triangles must
    // carry opposite orientations.
    let mut orient = UnionFind::new(n);
    let mut orientable = true;
    for g in &gens {
        for blade in 0..n {
            let other = g.apply(blade);
            if other != blade && !orient.union(blade, other, true) {
                orientable = false;
            }
        }
    }

    // Boundary circles: components of the graph whose nodes are boundary
    // vertices and whose edges are boundary edges.
    let mut circles = UnionFind::new(3 * n);
    let mut on_boundary = vec![false; 3 * n];
    for &(blade, s) in &boundary_edges {
        let ends: Vec<usize> = (0..3)
            .filter(|&t| t != s)
            .map(|t| corners.find(3 * blade + t).0)
            .collect();
        on_boundary[ends[0]] = true;
        on_boundary[ends[1]] = true;
        circles.union(ends[0], ends[1], false);
    }
    let boundary = (0..3 * n)
        .filter(|&v| on_boundary[v] && circles.find(v).0 == v)
        .count();

    let deficit = 2 - euler - boundary as i64;
    let genus_or_crosscaps = if orientable { deficit / 2 } else { deficit } as usize;
    OracleSurface {
        euler,
        orientable,
        boundary,
        genus_or_crosscaps,
    }
}

pub fn random_involution<R: Rng>(rng: &mut R, n: usize, fixed_weight: f64) -> Permutation {
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let mut images: Vec<usize> = (0..n).collect();
    let mut k = 0;
    while k + 1 < n {
        if rng.gen_bool(1.0 - fixed_weight) {
            images[points[k]] = points[k + 1];
            images[points[k + 1]] = points[k];
            k += 2;
        } else {
            k += 1;
        }
    }
    Permutation::from_images(images).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// Random transitive system under `(∞, ∞, ∞)` with `1 ≤ N ≤ max_n`: three
/// random involutions restricted to the orbit of blade 0.
pub fn random_system<R: Rng>(rng: &mut R, max_n: usize) -> BladeSystem {
    let n = rng.gen_range(1..=max_n);
    let weight = [0.0, 0.05, 0.3][rng.gen_range(0..3)];
    let gens: Vec<Permutation> = (0..3).map(|_| random_involution(rng, n, weight)).collect();
    let refs: Vec<&Permutation> = gens.iter().collect();
    let part = kleinmaps::perm::orbits(&refs, n).unwrap();
    let block = part.blocks()[part.block_of(0).unwrap()].clone();
    let mut index = vec![usize::MAX; n];
    for (k, &p) in block.iter().enumerate() {
        index[p] = k;
    }
    let restrict = |g: &Permutation| {
        Permutation::from_images(block.iter().map(|&p| index[g.apply(p)]).collect()).unwrap()
    };
    BladeSystem::new(
        restrict(&gens[0]),
        restrict(&gens[1]),
        restrict(&gens[2]),
        TriangleSignature::unconstrained(),
    )
    .unwrap()
}

/// All involutions of degree `n` as image vectors.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(images: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        let n = images.len();
        let Some(i) = (from..n).find(|&i| images[i] == usize::MAX) else {
            out.push(images.clone());
            return;
        };
        images[i] = i;
        go(images, i + 1, out);
        for j in i + 1..n {
            if images[j] == usize::MAX {
                images[i] = j;
                images[j] = i;
                go(images, i + 1, out);
                images[j] = usize::MAX;
            }
        }
        images[i] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], 0, &mut out);
    out
}

pub fn is_transitive(gens: &[&[usize]], n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g[p];
            if !seen[q] {
                seen[q] = true;
                count += 1;
                stack.push(q);
            }
        }
    }
    count == n
}

/// Size of the centraliser in `S_n` of a transitive tuple: an element is
/// fixed by where it sends point 0, so try each target.
pub fn centraliser_size(gens: &[&[usize]], n: usize) -> usize {
    let mut size = 0;
    'target: for target in 0..n {
        let mut c = vec![usize::MAX; n];
        c[0] = target;
        let mut stack = vec![0];
        while let Some(p) = stack.pop() {
            for g in gens {
                let (q, cq) = (g[p], g[c[p]]);
                if c[q] == usize::MAX {
                    c[q] = cq;
                    stack.push(q);
                } else if c[q] != cq {
                    continue 'target;
                }
            }
        }
        size += 1;
    }
    size
}

fn order_of(p: &[usize]) -> u64 {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut l: u64 = 1;
    for s in 0..n {
        let mut len = 0u64;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            l = num_integer::lcm(l, len);
        }
    }
    l
}

/// Whether `(a b)^l = 1`, for `l = 0` meaning no constraint.
fn product_ok(a: &[usize], b: &[usize], l: u32) -> bool {
    if l == 0 {
        return true;
    }
    // Left action: (a b)(x) = a(b(x)); the order is the same either way.
    let ab: Vec<usize> = (0..a.len()).map(|x| a[b[x]]).collect();
    u64::from(l) % order_of(&ab) == 0
}

/// Number of transitive triples `(τ, λ, ρ)` of involutions of degree `n` up
/// to simultaneous conjugation, by Burnside: the sum of centraliser sizes
/// over all triples divided by `n!`. `codes` bounds the orders of `τλ`,
/// `τρ`, `ρλ` respectively (0 = unbounded).
pub fn burnside_count(n: usize, codes: [u32; 3]) -> u64 {
    let inv = involutions(n);
    let mut total: u64 = 0;
    for t in &inv {
        for l in &inv {
            if !product_ok(t, l, codes[0]) {
                continue;
            }
            for r in &inv {
                if !product_ok(t, r, codes[1]) || !product_ok(r, l, codes[2]) {
                    continue;
                }
                let gens = [t.as_slice(), l.as_slice(), r.as_slice()];
                if is_transitive(&gens, n) {
                    total += centraliser_size(&gens, n) as u64;
                }
            }
        }
    }
    let fact: u64 = (1..=n as u64).product();
    assert_eq!(total % fact, 0, "Burnside sum not divisible by n!");
    total / fact
}
