//! Structure-constant algebras and the right Leibniz identity.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::field::{Field, FieldSpec};
use crate::linalg::{
    axpy, is_zero_vector, left_null_space, unit_vector, zero_vector, LinalgError, LinearMap,
    QuotientMap, Subspace, Vector,
};
use crate::verdict::{Method, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure table has {found} entries, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("{found} labels for dimension {dim}")]
    Labels { dim: usize, found: usize },
    #[error("right Leibniz identity fails on basis triple ({}, {}, {})", .triple.0, .triple.1, .triple.2)]
    NotRightLeibniz { triple: (usize, usize, usize), labels: [String; 3] },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subspace is not a two-sided ideal")]
    NotIdeal,
    #[error("[L, I] != 0 for the span of squares I")]
    KernelNotAnnihilated,
    #[error("vector of length {found} in an algebra of dimension {dim}")]
    Dimension { dim: usize, found: usize },
    #[error("{0} needs a finite field")]
    InfiniteField(&'static str),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A bilinear product on `F^n`, not necessarily Leibniz.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureTable<F> {
    dim: usize,
    labels: Vec<String>,
    /// `[e_i, e_j]` occupies `data[(i*n + j)*n .. (i*n + j + 1)*n]`.
    data: Vec<F>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl<F: Field> StructureTable<F> {
    pub fn zero(dim: usize) -> Self {
        StructureTable { dim, labels: default_labels(dim), data: vec![F::zero(); dim * dim * dim] }
    }

    pub fn new(labels: Vec<String>, data: Vec<F>) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if data.len() != dim * dim * dim {
            return Err(AlgebraError::Shape { expected: dim * dim * dim, found: data.len() });
        }
        Ok(StructureTable { dim, labels, data })
    }

    /// Table from sparse `(i, j, k, c)` entries meaning `[e_i, e_j] += c e_k`.
    pub fn from_entries<I>(labels: Vec<String>, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, usize, F)>,
    {
        let mut t = StructureTable {
            dim: labels.len(),
            data: vec![F::zero(); labels.len().pow(3)],
            labels,
        };
        for (i, j, k, c) in entries {
            t.set(i, j, k, t.get(i, j, k).clone() + c);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim {
            return Err(AlgebraError::Labels { dim: self.dim, found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: F) {
        let n = self.dim;
        self.data[(i * n + j) * n + k] = c;
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn product(&self, i: usize, j: usize) -> &[F] {
        let n = self.dim;
        &self.data[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: &[F]) {
        let n = self.dim;
        self.data[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(v);
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vector<F> {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi.clone() * yj.clone()), self.product(i, j));
            }
        }
        out
    }

    /// `[e_i, v]`
    fn left_basis(&self, i: usize, v: &[F]) -> Vector<F> {
        let mut out = zero_vector(self.dim);
        for (j, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.product(i, j));
        }
        out
    }

    /// `[v, e_j]`
    fn right_basis(&self, v: &[F], j: usize) -> Vector<F> {
        let mut out = zero_vector(self.dim);
        for (i, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.product(i, j));
        }
        out
    }

    /// Whether `[x,[y,z]] = [[x,y],z] - [[x,z],y]` holds for the basis
    /// triple.
    pub fn right_holds_at(&self, i: usize, j: usize, k: usize) -> bool {
        let lhs = self.left_basis(i, self.product(j, k));
        let mut rhs = self.right_basis(self.product(i, j), k);
        let t = self.right_basis(self.product(i, k), j);
        for (r, s) in rhs.iter_mut().zip(&t) {
            *r -= s.clone();
        }
        lhs == rhs
    }

    /// Whether `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` holds for the basis triple.
    pub fn left_holds_at(&self, i: usize, j: usize, k: usize) -> bool {
        let lhs = self.left_basis(i, self.product(j, k));
        let mut rhs = self.right_basis(self.product(i, j), k);
        let t = self.left_basis(j, self.product(i, k));
        for (r, s) in rhs.iter_mut().zip(&t) {
            *r += s.clone();
        }
        lhs == rhs
    }

    /// First basis triple violating the right identity, in lexicographic
    /// order.
    pub fn right_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| !self.right_holds_at(i, j, k))
    }

    pub fn left_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| !self.left_holds_at(i, j, k))
    }

    pub fn check_right_leibniz(&self) -> bool {
        self.right_failure().is_none()
    }

    pub fn check_left_leibniz(&self) -> bool {
        self.left_failure().is_none()
    }

    /// The table of `[x, y]_op = [y, x]`; left and right Leibniz swap.
    pub fn opposite(&self) -> Self {
        let mut t = Self::zero(self.dim);
        t.labels = self.labels.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set_product(i, j, self.product(j, i));
            }
        }
        t
    }

    pub fn is_abelian(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Nonzero entries `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> + '_ {
        let n = self.dim;
        self.data.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(idx, c)| {
            (idx / (n * n), (idx / n) % n, idx % n, c)
        })
    }

    pub fn into_algebra(self) -> Result<LeibnizAlgebra<F>, AlgebraError> {
        LeibnizAlgebra::new(self)
    }
}

impl<F: Field> fmt::Debug for StructureTable<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_products(self))
    }
}

/// Human-readable product list such as `[a,a]=b, [a,x]=1/2a`.
pub fn render_products<F: Field>(t: &StructureTable<F>) -> String {
    let mut parts = Vec::new();
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let p = t.product(i, j);
            if is_zero_vector(p) {
                continue;
            }
            parts.push(format!(
                "[{},{}]={}",
                t.labels[i],
                t.labels[j],
                render_vector(p, &t.labels)
            ));
        }
    }
    if parts.is_empty() {
        "abelian".to_string()
    } else {
        parts.join(", ")
    }
}

pub fn render_vector<F: Field>(v: &[F], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = if c.to_string().starts_with('-') {
            (true, -c.clone())
        } else {
            (false, c.clone())
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { "-" } else { "+" });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(l);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// A structure table on which the right Leibniz identity has been verified.
#[derive(Clone)]
pub struct LeibnizAlgebra<F: Field> {
    table: StructureTable<F>,
    left: OnceLock<bool>,
    symmetric: OnceLock<Verdict<()>>,
}

impl<F: Field> PartialEq for LeibnizAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl<F: Field> Eq for LeibnizAlgebra<F> {}

impl<F: Field> fmt::Debug for LeibnizAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-dim over {}: {:?}", self.dim(), F::spec(), self.table)
    }
}

impl<F: Field> LeibnizAlgebra<F> {
    pub fn new(table: StructureTable<F>) -> Result<Self, AlgebraError> {
        if let Some((i, j, k)) = table.right_failure() {
            let l = &table.labels;
            return Err(AlgebraError::NotRightLeibniz {
                triple: (i, j, k),
                labels: [l[i].clone(), l[j].clone(), l[k].clone()],
            });
        }
        Ok(Self::trusted(table))
    }

    /// Wraps a table already known to satisfy the right identity.
    pub(crate) fn trusted(table: StructureTable<F>) -> Self {
        debug_assert!(table.check_right_leibniz());
        LeibnizAlgebra { table, left: OnceLock::new(), symmetric: OnceLock::new() }
    }

    pub fn from_entries<I>(labels: &[&str], entries: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (usize, usize, usize, F)>,
    {
        let labels = labels.iter().map(|s| s.to_string()).collect();
        Self::new(StructureTable::from_entries(labels, entries))
    }

    pub fn abelian(n: usize) -> Self {
        Self::trusted(StructureTable::zero(n))
    }

    pub fn field(&self) -> FieldSpec {
        F::spec()
    }

    pub fn dim(&self) -> usize {
        self.table.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.table.labels
    }

    pub fn table(&self) -> &StructureTable<F> {
        &self.table
    }

    pub fn into_table(self) -> StructureTable<F> {
        self.table
    }

    pub fn basis_vector(&self, i: usize) -> Vector<F> {
        unit_vector(self.dim(), i)
    }

    pub fn full(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    pub fn zero_space(&self) -> Subspace<F> {
        Subspace::zero(self.dim())
    }

    /// Span of the basis vectors with the given labels.
    pub fn span_labels(&self, names: &[&str]) -> Subspace<F> {
        let vs = names.iter().map(|name| {
            let i = self
                .labels()
                .iter()
                .position(|l| l == name)
                .unwrap_or_else(|| panic!("no basis vector labelled {name}"));
            self.basis_vector(i)
        });
        Subspace::span_unchecked(self.dim(), vs)
    }

    pub fn check_right_leibniz(&self) -> bool {
        true
    }

    pub fn check_left_leibniz(&self) -> bool {
        *self.left.get_or_init(|| self.table.check_left_leibniz())
    }

    /// Left and right identities, plus `[[x,y],[x,y]] = 0` in characteristic
    /// 2, checked over all pairs of elements.
    pub fn check_symmetric(&self) -> Verdict<()> {
        self.symmetric
            .get_or_init(|| {
                if !self.check_left_leibniz() {
                    return Verdict::no(Method::Exhaustive, "left identity fails");
                }
                if F::characteristic() != 2 {
                    return Verdict::yes_bare(Method::Structural, "left and right identities hold");
                }
                let Ok(all) = crate::linalg::all_vectors::<F>(self.dim()) else {
                    return Verdict::unknown("characteristic 2 over an infinite field");
                };
                for x in &all {
                    for y in &all {
                        let z = self.bracket(x, y);
                        if !is_zero_vector(&self.bracket(&z, &z)) {
                            return Verdict::no(Method::Exhaustive, "[[x,y],[x,y]] != 0");
                        }
                    }
                }
                Verdict::yes_bare(Method::Exhaustive, "all pairs checked")
            })
            .clone()
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_true()
    }

    pub fn is_lie(&self) -> bool {
        (0..self.dim()).all(|i| {
            is_zero_vector(self.table.product(i, i))
                && (0..i).all(|j| {
                    let s = crate::linalg::add(self.table.product(i, j), self.table.product(j, i));
                    is_zero_vector(&s)
                })
        })
    }

    pub fn opposite(&self) -> StructureTable<F> {
        self.table.opposite()
    }

    fn check_vector(&self, v: &[F]) -> Result<(), AlgebraError> {
        if v.len() != self.dim() {
            return Err(AlgebraError::Dimension { dim: self.dim(), found: v.len() });
        }
        Ok(())
    }

    pub fn try_bracket(&self, x: &[F], y: &[F]) -> Result<Vector<F>, AlgebraError> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.table.bracket(x, y))
    }

    /// Panics on a dimension mismatch.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Vector<F> {
        self.try_bracket(x, y).expect("vector dimension")
    }

    pub fn square(&self, x: &[F]) -> Vector<F> {
        self.bracket(x, x)
    }

    /// `x` lies in `J = {x : x^2 = 0}`.
    pub fn in_j(&self, x: &[F]) -> bool {
        is_zero_vector(&self.square(x))
    }

    /// `L_x : v -> [x, v]`
    pub fn left_mult(&self, x: &[F]) -> LinearMap<F> {
        let n = self.dim();
        LinearMap::from_images(n, (0..n).map(|j| self.table.right_basis(x, j)).collect())
    }

    /// `R_x : v -> [v, x]`
    pub fn right_mult(&self, x: &[F]) -> LinearMap<F> {
        let n = self.dim();
        LinearMap::from_images(n, (0..n).map(|i| self.table.left_basis(i, x)).collect())
    }

    pub fn bracket_spaces(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut out = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                out.push(self.table.bracket(x, y));
            }
        }
        Subspace::span_unchecked(self.dim(), out)
    }

    /// `[A, B] + [B, A]`
    pub fn two_sided(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        self.bracket_spaces(a, b).sum(&self.bracket_spaces(b, a))
    }

    /// `L = L^1 ⊇ L^2 ⊇ ...`, ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace<F>> {
        let full = self.full();
        self.series(|x| self.bracket_spaces(x, &full))
    }

    /// `L = L^(0) ⊇ L^(1) ⊇ ...`, ending at the first repeated term.
    pub fn derived_series(&self) -> Vec<Subspace<F>> {
        self.series(|x| self.bracket_spaces(x, x))
    }

    fn series(&self, step: impl Fn(&Subspace<F>) -> Subspace<F>) -> Vec<Subspace<F>> {
        let mut out = vec![self.full()];
        for _ in 0..=self.dim() {
            let last = out.last().expect("nonempty");
            let next = step(last);
            if next.dim() >= last.dim() {
                break;
            }
            out.push(next);
        }
        out
    }

    /// `L^k` with `L^1 = L`.
    pub fn power(&self, k: usize) -> Subspace<F> {
        assert!(k >= 1);
        let full = self.full();
        let mut x = full.clone();
        for _ in 1..k {
            x = self.bracket_spaces(&x, &full);
        }
        x
    }

    pub fn derived(&self) -> Subspace<F> {
        let full = self.full();
        self.bracket_spaces(&full, &full)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(|s| s.is_zero())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|s| s.is_zero())
    }

    /// Least `c` with `L^{c+1} = 0`; 0 for the zero algebra.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        s.last().is_some_and(|x| x.is_zero()).then(|| s.len() - 1)
    }

    /// Least `k` with `L^(k) = 0`.
    pub fn derived_length(&self) -> Option<usize> {
        let s = self.derived_series();
        s.last().is_some_and(|x| x.is_zero()).then(|| s.len() - 1)
    }

    /// `I = span{x^2}`, from squares of basis vectors and symmetrized
    /// products. Fails if `[L, I] != 0`.
    pub fn leibniz_kernel(&self) -> Result<Subspace<F>, AlgebraError> {
        let n = self.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(self.table.product(i, i).to_vec());
            for j in i + 1..n {
                gens.push(crate::linalg::add(self.table.product(i, j), self.table.product(j, i)));
            }
        }
        let kernel = Subspace::span_unchecked(n, gens);
        if !self.bracket_spaces(&self.full(), &kernel).is_zero() {
            return Err(AlgebraError::KernelNotAnnihilated);
        }
        Ok(kernel)
    }

    /// The kernel; the right identity guarantees `[L, I] = 0`.
    pub fn kernel(&self) -> Subspace<F> {
        self.leibniz_kernel().expect("right Leibniz algebras annihilate I on the left")
    }

    pub fn center(&self) -> Subspace<F> {
        let full = self.full();
        self.centralizer(&full, &full)
    }

    /// `C_B(A) = {b in B : [b,A] + [A,b] = 0}`
    pub fn centralizer(&self, b: &Subspace<F>, a: &Subspace<F>) -> Subspace<F> {
        self.transporter(b, a, &Subspace::zero(self.dim()))
    }

    /// `N_B(A) = {b in B : [b,A] + [A,b] ⊆ A}`
    pub fn normalizer(&self, b: &Subspace<F>, a: &Subspace<F>) -> Subspace<F> {
        self.transporter(b, a, a)
    }

    /// `{b in B : [b,A] + [A,b] ⊆ T}`
    pub fn transporter(&self, b: &Subspace<F>, a: &Subspace<F>, target: &Subspace<F>) -> Subspace<F> {
        if a.is_zero() || b.is_zero() || target.is_full() {
            return b.clone();
        }
        let reduce = |v: Vector<F>| target.reduce(&v);
        let rows: Vec<Vector<F>> = b
            .basis()
            .iter()
            .map(|bi| {
                let mut row = Vec::with_capacity(2 * a.dim() * self.dim());
                for ai in a.basis() {
                    row.extend(reduce(self.table.bracket(bi, ai)));
                    row.extend(reduce(self.table.bracket(ai, bi)));
                }
                row
            })
            .collect();
        let width = 2 * a.dim() * self.dim();
        let sols = left_null_space(&rows, width);
        Subspace::span_unchecked(self.dim(), sols.iter().map(|c| b.combine(c)))
    }

    /// `{b in B : [b,a] + [a,b] = 0 for a in A}`
    pub fn polar_radical(&self, b: &Subspace<F>, a: &Subspace<F>) -> Subspace<F> {
        if a.is_zero() || b.is_zero() {
            return b.clone();
        }
        let rows: Vec<Vector<F>> = b
            .basis()
            .iter()
            .map(|bi| {
                a.basis()
                    .iter()
                    .flat_map(|ai| {
                        crate::linalg::add(&self.table.bracket(bi, ai), &self.table.bracket(ai, bi))
                    })
                    .collect()
            })
            .collect();
        let sols = left_null_space(&rows, a.dim() * self.dim());
        Subspace::span_unchecked(self.dim(), sols.iter().map(|c| b.combine(c)))
    }

    /// Basis of the derivation algebra `{D : D[u,v] = [Du,v] + [u,Dv]}`.
    pub fn derivations(&self) -> Vec<LinearMap<F>> {
        let n = self.dim();
        // unknown D(e_l)_k sits at index l*n + k
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = self.table.product(i, j);
                for c in 0..n {
                    let mut row = zero_vector::<F>(n * n);
                    for (k, pk) in p.iter().enumerate() {
                        row[k * n + c] += pk.clone();
                    }
                    for k in 0..n {
                        row[i * n + k] -= self.table.get(k, j, c).clone();
                        row[j * n + k] -= self.table.get(i, k, c).clone();
                    }
                    rows.push(row);
                }
            }
        }
        crate::linalg::null_space(&rows, n * n)
            .into_iter()
            .map(|d| LinearMap::from_images(n, d.chunks(n).map(|c| c.to_vec()).collect()))
            .collect()
    }

    pub fn is_subalgebra(&self, b: &Subspace<F>) -> bool {
        b.basis()
            .iter()
            .all(|x| b.basis().iter().all(|y| b.contains(&self.table.bracket(x, y))))
    }

    pub fn is_ideal(&self, b: &Subspace<F>) -> bool {
        b.basis().iter().all(|x| {
            (0..self.dim()).all(|j| {
                b.contains(&self.table.right_basis(x, j)) && b.contains(&self.table.left_basis(j, x))
            })
        })
    }

    pub fn subalgebra(&self, space: Subspace<F>) -> Result<Subalgebra<'_, F>, AlgebraError> {
        if space.ambient() != self.dim() {
            return Err(AlgebraError::Dimension { dim: self.dim(), found: space.ambient() });
        }
        if !self.is_subalgebra(&space) {
            return Err(AlgebraError::NotSubalgebra);
        }
        Ok(Subalgebra { parent: self, space })
    }

    /// The algebra induced on a subalgebra `H`, in the canonical basis of `H`,
    /// with the embedding `F^{dim H} -> F^n`.
    pub fn restrict(&self, h: &Subspace<F>) -> Result<(Self, LinearMap<F>), AlgebraError> {
        if !self.is_subalgebra(h) {
            return Err(AlgebraError::NotSubalgebra);
        }
        let d = h.dim();
        let rows = h.basis();
        let labels = rows
            .iter()
            .enumerate()
            .map(|(i, r)| self.label_of(r).unwrap_or_else(|| format!("h{i}")))
            .collect();
        let mut t = StructureTable::zero(d);
        t.labels = labels;
        for i in 0..d {
            for j in 0..d {
                let p = self.table.bracket(&rows[i], &rows[j]);
                t.set_product(i, j, &h.coordinates(&p).expect("closed"));
            }
        }
        let embed = LinearMap::from_images(self.dim(), rows.to_vec());
        Ok((Self::new(t)?, embed))
    }

    /// `L/A` in the basis of the standard complement of `A`.
    pub fn quotient(&self, a: &Subspace<F>) -> Result<(Self, QuotientMap<F>), AlgebraError> {
        if !self.is_ideal(a) {
            return Err(AlgebraError::NotIdeal);
        }
        let q = QuotientMap::new(&self.full(), a)?;
        let reps = q.complement();
        let d = q.dim();
        let mut t = StructureTable::zero(d);
        t.labels = reps
            .iter()
            .enumerate()
            .map(|(i, r)| self.label_of(r).unwrap_or_else(|| format!("q{i}")))
            .collect();
        for i in 0..d {
            for j in 0..d {
                t.set_product(i, j, &q.project(&self.table.bracket(&reps[i], &reps[j])));
            }
        }
        Ok((Self::new(t)?, q))
    }

    fn label_of(&self, v: &[F]) -> Option<String> {
        let mut nz = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (nz.next(), nz.next()) {
            (Some((i, c)), None) if c.is_one() => Some(self.labels()[i].clone()),
            _ => None,
        }
    }

    pub fn render_vector(&self, v: &[F]) -> String {
        render_vector(v, self.labels())
    }

    pub fn render_subspace(&self, s: &Subspace<F>) -> String {
        let parts: Vec<_> = s.basis().iter().map(|v| self.render_vector(v)).collect();
        format!("<{}>", parts.join(", "))
    }

    /// Nonzero entries as `(i, j, k, scalar)`.
    pub fn sparse_entries(&self) -> Vec<(usize, usize, usize, String)> {
        self.table.entries().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect()
    }
}

/// A subspace verified to be closed under the bracket of its parent.
#[derive(Clone, Debug)]
pub struct Subalgebra<'a, F: Field> {
    parent: &'a LeibnizAlgebra<F>,
    space: Subspace<F>,
}

impl<'a, F: Field> Subalgebra<'a, F> {
    pub fn parent(&self) -> &'a LeibnizAlgebra<F> {
        self.parent
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn into_space(self) -> Subspace<F> {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra(&self) -> LeibnizAlgebra<F> {
        self.parent.restrict(&self.space).expect("verified closed").0
    }
}
