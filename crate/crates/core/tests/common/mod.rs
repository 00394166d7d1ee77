#![allow(dead_code)]
//! Brute-force references that share no code with the library. Scalars are
//! raw residues mod p, a vector is its base-p encoding and a subspace is the
//! bitmask of its elements, so `p^n <= 128`.

use std::collections::HashMap;

use leibniz::{Gf, LeibnizAlgebra, Subspace};

pub type Mask = u128;

pub struct Raw {
    pub p: u32,
    pub n: usize,
    pub size: usize,
    add: Vec<u8>,
    smul: Vec<u8>,
    prod: Vec<u8>,
}

pub fn encode(p: u32, digits: &[u32]) -> usize {
    digits.iter().rev().fold(0usize, |acc, &d| acc * p as usize + (d % p) as usize)
}

pub fn decode(p: u32, n: usize, mut u: usize) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = (u % p as usize) as u32;
            u /= p as usize;
            d
        })
        .collect()
}

impl Raw {
    /// `table[(i * n + j) * n + k]` is the `e_k` coefficient of `[e_i, e_j]`.
    pub fn new(p: u32, n: usize, table: &[u32]) -> Self {
        let size = (p as usize).pow(n as u32);
        assert!(size <= 128, "oracle limited to p^n <= 128");
        let vecs: Vec<Vec<u32>> = (0..size).map(|u| decode(p, n, u)).collect();
        let mut add = vec![0u8; size * size];
        for u in 0..size {
            for v in 0..size {
                let s: Vec<u32> = (0..n).map(|k| (vecs[u][k] + vecs[v][k]) % p).collect();
                add[u * size + v] = encode(p, &s) as u8;
            }
        }
        let mut smul = vec![0u8; p as usize * size];
        for c in 0..p {
            for u in 0..size {
                let s: Vec<u32> = vecs[u].iter().map(|d| d * c % p).collect();
                smul[c as usize * size + u] = encode(p, &s) as u8;
            }
        }
        let mut prod = vec![0u8; size * size];
        for u in 0..size {
            for v in 0..size {
                let mut out = vec![0u32; n];
                for i in 0..n {
                    for j in 0..n {
                        let c = vecs[u][i] * vecs[v][j] % p;
                        if c == 0 {
                            continue;
                        }
                        for (k, o) in out.iter_mut().enumerate() {
                            *o = (*o + c * table[(i * n + j) * n + k]) % p;
                        }
                    }
                }
                prod[u * size + v] = encode(p, &out) as u8;
            }
        }
        Raw { p, n, size, add, smul, prod }
    }

    pub fn of<const P: u32>(l: &LeibnizAlgebra<Gf<P>>) -> Self {
        let t: Vec<u32> = l.table().data().iter().map(|c| c.value()).collect();
        Raw::new(P, l.dim(), &t)
    }

    pub fn add(&self, u: usize, v: usize) -> usize {
        self.add[u * self.size + v] as usize
    }

    pub fn scale(&self, c: u32, u: usize) -> usize {
        self.smul[c as usize * self.size + u] as usize
    }

    pub fn bracket(&self, u: usize, v: usize) -> usize {
        self.prod[u * self.size + v] as usize
    }

    pub fn unit(&self, i: usize) -> usize {
        (self.p as usize).pow(i as u32)
    }

    pub fn full(&self) -> Mask {
        if self.size == 128 {
            Mask::MAX
        } else {
            (1u128 << self.size) - 1
        }
    }

    pub fn zero(&self) -> Mask {
        1
    }

    pub fn elements(&self, m: Mask) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&u| m >> u & 1 == 1)
    }

    pub fn extend(&self, m: Mask, v: usize) -> Mask {
        let mut out = m;
        for s in self.elements(m) {
            let mut w = s;
            for _ in 1..self.p {
                w = self.add(w, v);
                out |= 1 << w;
            }
        }
        out
    }

    pub fn span(&self, gens: &[usize]) -> Mask {
        gens.iter().fold(self.zero(), |m, &g| self.extend(m, g))
    }

    pub fn dim(&self, m: Mask) -> usize {
        let mut k = 0;
        let mut c = 1u32;
        while c < m.count_ones() {
            c *= self.p;
            k += 1;
        }
        k
    }

    /// `|A + B| = |A| |B| / |A ∩ B|`.
    pub fn spans_all(&self, a: Mask, b: Mask) -> bool {
        a.count_ones() as u64 * b.count_ones() as u64 == self.size as u64 * (a & b).count_ones() as u64
    }

    /// Every subspace, grown one vector at a time from zero.
    pub fn subspaces(&self) -> Vec<Mask> {
        let mut seen = vec![self.zero()];
        let mut frontier = vec![self.zero()];
        while let Some(m) = frontier.pop() {
            for v in 0..self.size {
                if m >> v & 1 == 0 {
                    let t = self.extend(m, v);
                    if !seen.contains(&t) {
                        seen.push(t);
                        frontier.push(t);
                    }
                }
            }
        }
        seen.sort();
        seen
    }

    fn closed(&self, a: Mask, left: Mask, right: Mask) -> bool {
        self.elements(left).all(|u| self.elements(right).all(|v| a >> self.bracket(u, v) & 1 == 1))
    }

    pub fn is_subalgebra(&self, a: Mask) -> bool {
        self.closed(a, a, a)
    }

    /// `A` is a two-sided ideal of the subalgebra `C ⊇ A`.
    pub fn is_ideal_in(&self, a: Mask, c: Mask) -> bool {
        a & !c == 0 && self.closed(a, a, c) && self.closed(a, c, a)
    }

    pub fn is_ideal(&self, a: Mask) -> bool {
        self.is_ideal_in(a, self.full())
    }

    pub fn to_lib<const P: u32>(&self, m: Mask) -> Subspace<Gf<P>> {
        assert_eq!(P, self.p);
        let mut gens = Vec::new();
        let mut cur = self.zero();
        for u in self.elements(m) {
            if cur >> u & 1 == 0 {
                gens.push(u);
                cur = self.extend(cur, u);
            }
        }
        let vectors = gens.iter().map(|&u| decode(self.p, self.n, u).into_iter().map(Gf::<P>::new).collect::<Vec<_>>());
        Subspace::span(self.n, vectors).expect("ambient dimension")
    }

    pub fn mask_of<const P: u32>(&self, s: &Subspace<Gf<P>>) -> Mask {
        let gens: Vec<usize> = s
            .basis()
            .iter()
            .map(|v| encode(self.p, &v.iter().map(|c| c.value()).collect::<Vec<_>>()))
            .collect();
        self.span(&gens)
    }
}

/// Per-algebra oracle state: the subspace lattice with memoized searches.
pub struct Oracle {
    pub raw: Raw,
    pub subspaces: Vec<Mask>,
    pub subalgebras: Vec<Mask>,
    pub ideals: Vec<Mask>,
    subideal_memo: HashMap<Mask, bool>,
}

impl Oracle {
    pub fn new(raw: Raw) -> Self {
        let subspaces = raw.subspaces();
        let subalgebras: Vec<Mask> = subspaces.iter().copied().filter(|&m| raw.is_subalgebra(m)).collect();
        let ideals = subalgebras.iter().copied().filter(|&m| raw.is_ideal(m)).collect();
        Oracle { raw, subspaces, subalgebras, ideals, subideal_memo: HashMap::new() }
    }

    pub fn of<const P: u32>(l: &LeibnizAlgebra<Gf<P>>) -> Self {
        Oracle::new(Raw::of(l))
    }

    /// Chain search upward: `B ◁ D ◁ ... ◁ L` through any subalgebras.
    pub fn is_subideal(&mut self, b: Mask) -> bool {
        if b == self.raw.full() {
            return true;
        }
        if let Some(&r) = self.subideal_memo.get(&b) {
            return r;
        }
        let uppers: Vec<Mask> = self
            .subalgebras
            .iter()
            .copied()
            .filter(|&d| d != b && b & !d == 0 && self.raw.is_ideal_in(b, d))
            .collect();
        let r = uppers.into_iter().any(|d| self.is_subideal(d));
        self.subideal_memo.insert(b, r);
        r
    }

    /// Largest ideal of `L` inside `B`.
    pub fn core(&self, b: Mask) -> Mask {
        self.ideals
            .iter()
            .copied()
            .filter(|&k| k & !b == 0)
            .max_by_key(|k| k.count_ones())
            .expect("zero is an ideal")
    }

    pub fn is_c_ideal(&self, b: Mask) -> bool {
        let core = self.core(b);
        self.ideals.iter().any(|&k| self.raw.spans_all(b, k) && (b & k) & !core == 0)
    }

    /// The definition, searched over every subalgebra with no reduction.
    pub fn is_weak_c_ideal(&mut self, b: Mask) -> bool {
        let core = self.core(b);
        let cands: Vec<Mask> = self
            .subalgebras
            .iter()
            .copied()
            .filter(|&c| self.raw.spans_all(b, c) && (b & c) & !core == 0)
            .collect();
        cands.into_iter().any(|c| self.is_subideal(c))
    }

    /// A complete flag of ideals, searched over all ideal chains.
    pub fn is_supersolvable(&self) -> bool {
        fn grow(o: &Oracle, cur: Mask, d: usize) -> bool {
            if d == o.raw.n {
                return true;
            }
            o.ideals
                .iter()
                .any(|&k| o.raw.dim(k) == d + 1 && cur & !k == 0 && grow(o, k, d + 1))
        }
        grow(self, self.raw.zero(), 0)
    }

    /// `span{[a, b] : a in A, b in B}`.
    pub fn product(&self, a: Mask, b: Mask) -> Mask {
        let mut out = self.raw.zero();
        for u in self.raw.elements(a) {
            for v in self.raw.elements(b) {
                let w = self.raw.bracket(u, v);
                if out >> w & 1 == 0 {
                    out = self.raw.extend(out, w);
                }
            }
        }
        out
    }

    pub fn is_nilpotent(&self, u: Mask) -> bool {
        let mut s = u;
        loop {
            let next = self.product(s, u);
            if next == self.raw.zero() {
                return true;
            }
            if next == s {
                return false;
            }
            s = next;
        }
    }

    pub fn is_solvable(&self, u: Mask) -> bool {
        let mut s = u;
        loop {
            let next = self.product(s, s);
            if next == self.raw.zero() {
                return true;
            }
            if next == s {
                return false;
            }
            s = next;
        }
    }

    /// Left identity on all element triples, plus `[[x,y],[x,y]] = 0` in
    /// characteristic 2.
    pub fn is_symmetric(&self) -> bool {
        let r = &self.raw;
        let all: Vec<usize> = (0..r.size).collect();
        let left = all.iter().all(|&x| {
            all.iter().all(|&y| {
                all.iter().all(|&z| {
                    let lhs = r.bracket(x, r.bracket(y, z));
                    let rhs = r.add(r.bracket(r.bracket(x, y), z), r.bracket(y, r.bracket(x, z)));
                    lhs == rhs
                })
            })
        });
        let quadratic = r.p != 2
            || all.iter().all(|&x| {
                all.iter().all(|&y| {
                    let z = r.bracket(x, y);
                    r.bracket(z, z) == 0
                })
            });
        left && quadratic
    }

    pub fn maximal_nilpotent(&self) -> Vec<Mask> {
        let nil: Vec<Mask> = self.subalgebras.iter().copied().filter(|&u| self.is_nilpotent(u)).collect();
        nil.iter().copied().filter(|&u| !nil.iter().any(|&v| v != u && u & !v == 0)).collect()
    }

    pub fn maximal_in(&self, u: Mask) -> Vec<Mask> {
        let inside: Vec<Mask> = self.subalgebras.iter().copied().filter(|&m| m != u && m & !u == 0).collect();
        inside.iter().copied().filter(|&m| !inside.iter().any(|&k| k != m && m & !k == 0)).collect()
    }

    /// Solvable and symmetric, and every maximal subalgebra of every maximal
    /// nilpotent subalgebra is a weak c-ideal.
    pub fn supersolvability_hypothesis(&mut self) -> bool {
        if !self.is_solvable(self.raw.full()) || !self.is_symmetric() {
            return false;
        }
        let ms: Vec<Mask> = self.maximal_nilpotent().into_iter().flat_map(|u| self.maximal_in(u)).collect();
        ms.into_iter().all(|m| self.is_weak_c_ideal(m))
    }

    pub fn lines(&self) -> Vec<Mask> {
        self.subalgebras.iter().copied().filter(|&m| self.raw.dim(m) == 1).collect()
    }

    pub fn all_lines_c(&self) -> bool {
        self.lines().into_iter().all(|m| self.is_c_ideal(m))
    }
}

/// Number of `k`-dimensional subspaces of `GF(p)^n`.
pub fn gaussian_binomial(n: u32, k: u32, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= p.pow(n - i) - 1;
        den *= p.pow(i + 1) - 1;
    }
    num / den
}

/// `[e_i, [e_j, e_k]] - [[e_i, e_j], e_k] + [[e_i, e_k], e_j]` with partially
/// known products; `None` when an unknown product is needed.
fn right_defect(p: u32, n: usize, t: &[Option<Vec<u32>>], i: usize, j: usize, k: usize) -> Option<Vec<u32>> {
    let get = |a: usize, b: usize| t[a * n + b].as_ref();
    let mut out = vec![0u32; n];
    let mut acc = |coeffs: &[u32], sign: u32, left: bool, fixed: usize| -> Option<()> {
        for (m, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let v = if left { get(fixed, m)? } else { get(m, fixed)? };
            for (o, &x) in out.iter_mut().zip(v) {
                *o = (*o + sign * c % p * x) % p;
            }
        }
        Some(())
    };
    acc(get(j, k)?, 1, true, i)?;
    acc(get(i, j)?, p - 1, false, k)?;
    acc(get(i, k)?, 1, false, j)?;
    Some(out)
}

/// Right Leibniz tables by backtracking over products in shell order
/// (`max(i, j)` increasing), rejecting any evaluable nonzero triple defect.
pub fn enumerate_pruned(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut order: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    order.sort_by_key(|&(i, j)| (i.max(j), i, j));
    let size = (p as usize).pow(n as u32);
    let vecs: Vec<Vec<u32>> = (0..size).map(|u| decode(p, n, u)).collect();
    let mut t: Vec<Option<Vec<u32>>> = vec![None; n * n];
    let mut out = Vec::new();
    fn go(
        p: u32,
        n: usize,
        pos: usize,
        order: &[(usize, usize)],
        vecs: &[Vec<u32>],
        t: &mut Vec<Option<Vec<u32>>>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == order.len() {
            out.push(t.iter().flat_map(|v| v.clone().expect("assigned")).collect());
            return;
        }
        let (a, b) = order[pos];
        for v in vecs {
            t[a * n + b] = Some(v.clone());
            let ok = (0..n).all(|i| {
                (0..n).all(|j| {
                    (0..n).all(|k| right_defect(p, n, t, i, j, k).is_none_or(|d| d.iter().all(|&x| x == 0)))
                })
            });
            if ok {
                go(p, n, pos + 1, order, vecs, t, out);
            }
        }
        t[a * n + b] = None;
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    go(p, n, 0, &order, &vecs, &mut t, &mut out);
    out.sort();
    out
}

/// Every table checked in full, no pruning.
pub fn enumerate_unpruned(p: u32, n: usize) -> Vec<Vec<u32>> {
    let cells = n * n * n;
    let total = (p as u64).pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let flat = decode(p, cells, code as usize);
        let t: Vec<Option<Vec<u32>>> = (0..n * n).map(|q| Some(flat[q * n..(q + 1) * n].to_vec())).collect();
        let ok = (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| right_defect(p, n, &t, i, j, k).unwrap().iter().all(|&x| x == 0)))
        });
        if ok {
            out.push(flat);
        }
    }
    out.sort();
    out
}

pub fn table_of<const P: u32>(l: &LeibnizAlgebra<Gf<P>>) -> Vec<u32> {
    l.table().data().iter().map(|c| c.value()).collect()
}
