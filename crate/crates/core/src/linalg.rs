//! Canonical subspace arithmetic over exact fields.
//!
//! A [`Subspace`] is stored as the nonzero rows of its reduced row-echelon
//! form, so equal subspaces have identical representations and can be hashed,
//! compared and deduplicated directly.

use std::fmt;

use thiserror::Error;

use crate::field::Field;

pub type Vector<F> = Vec<F>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("vectors of length {found} in an ambient space of dimension {expected}")]
    Ragged { expected: usize, found: usize },
    #[error("subspace enumeration needs a finite field")]
    InfiniteField,
    #[error("subspace is not contained in the ambient space")]
    NotContained,
    #[error("requested dimension {k} exceeds ambient dimension {n}")]
    DimensionTooLarge { n: usize, k: usize },
}

pub fn zero_vector<F: Field>(n: usize) -> Vector<F> {
    vec![F::zero(); n]
}

pub fn unit_vector<F: Field>(n: usize, i: usize) -> Vector<F> {
    let mut v = zero_vector(n);
    v[i] = F::one();
    v
}

pub fn is_zero_vector<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `acc += c * v`
pub fn axpy<F: Field>(acc: &mut [F], c: &F, v: &[F]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c.clone() * x.clone();
        }
    }
}

pub fn scale<F: Field>(c: &F, v: &[F]) -> Vector<F> {
    v.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn add<F: Field>(u: &[F], v: &[F]) -> Vector<F> {
    u.iter().zip(v).map(|(a, b)| a.clone() + b.clone()).collect()
}

pub fn sub<F: Field>(u: &[F], v: &[F]) -> Vector<F> {
    u.iter().zip(v).map(|(a, b)| a.clone() - b.clone()).collect()
}

/// Reduces `rows` (all of length `ncols`) to reduced row-echelon form in
/// place, dropping zero rows. Returns the pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vector<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x *= inv.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for the `m x n` matrix given by `rows`.
pub fn null_space<F: Field>(rows: &[Vector<F>], ncols: usize) -> Vec<Vector<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = unit_vector(ncols, free);
        for (row, &p) in m.iter().zip(&pivots) {
            x[p] = -row[free].clone();
        }
        basis.push(x);
    }
    basis
}

/// Basis of `{t : sum_i t_i rows[i] = 0}`.
pub fn left_null_space<F: Field>(rows: &[Vector<F>], ncols: usize) -> Vec<Vector<F>> {
    let transposed: Vec<Vector<F>> = (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect();
    null_space(&transposed, rows.len())
}

/// A subspace of `F^n` in canonical reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<Vector<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
        }
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vector<F>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::Ragged { expected: ambient, found: v.len() });
            }
            if !is_zero_vector(&v) {
                rows.push(v);
            }
        }
        rref(&mut rows, ambient);
        Ok(Subspace { ambient, rows })
    }

    /// Span of vectors already known to have the right length.
    pub(crate) fn span_unchecked<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector<F>>,
    {
        let mut rows: Vec<Vector<F>> = vectors.into_iter().filter(|v| !is_zero_vector(v)).collect();
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        rref(&mut rows, ambient);
        Subspace { ambient, rows }
    }

    pub fn line(v: Vector<F>) -> Self {
        let n = v.len();
        Self::span_unchecked(n, [v])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vector<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("rows are nonzero"))
            .collect()
    }

    fn check_ambient(&self, other_ambient: usize) {
        assert_eq!(
            self.ambient, other_ambient,
            "subspaces live in ambient spaces of different dimension"
        );
    }

    /// Remainder of `v` after reduction against the basis.
    pub fn reduce(&self, v: &[F]) -> Vector<F> {
        self.check_ambient(v.len());
        let mut r = v.to_vec();
        for row in &self.rows {
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// `self <= other`
    pub fn leq(&self, other: &Self) -> bool {
        self.check_ambient(other.ambient);
        self.rows.len() <= other.rows.len() && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn lt_strict(&self, other: &Self) -> bool {
        self.dim() < other.dim() && self.leq(other)
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.check_ambient(other.ambient);
        if other.leq(self) {
            return self.clone();
        }
        Self::span_unchecked(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    /// Intersection by the Zassenhaus stacking `[U U; V 0]`.
    pub fn intersect(&self, other: &Self) -> Self {
        self.check_ambient(other.ambient);
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Self::zero(n);
        }
        if self.leq(other) {
            return self.clone();
        }
        if other.leq(self) {
            return other.clone();
        }
        let mut m: Vec<Vector<F>> = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.rows {
            let mut row = u.clone();
            row.extend(u.iter().cloned());
            m.push(row);
        }
        for v in &other.rows {
            let mut row = v.clone();
            row.extend(std::iter::repeat_n(F::zero(), n));
            m.push(row);
        }
        rref(&mut m, 2 * n);
        let inter = m
            .into_iter()
            .filter(|row| is_zero_vector(&row[..n]))
            .map(|row| row[n..].to_vec());
        Self::span_unchecked(n, inter)
    }

    /// Coordinates of `v` with respect to [`Subspace::basis`], if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vector<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots().into_iter().map(|p| v[p].clone()).collect())
    }

    /// `sub` in the coordinates of this subspace's basis; `None` unless
    /// `sub ⊆ self`.
    pub fn relative(&self, sub: &Subspace<F>) -> Option<Subspace<F>> {
        let rows = sub.basis().iter().map(|v| self.coordinates(v)).collect::<Option<Vec<_>>>()?;
        Some(Subspace::span_unchecked(self.dim(), rows))
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[F]) -> Vector<F> {
        assert_eq!(coords.len(), self.dim());
        let mut v = zero_vector(self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            axpy(&mut v, c, row);
        }
        v
    }

    /// Unit vectors on the non-pivot columns; they span a complement.
    pub fn standard_complement(&self) -> Vec<Vector<F>> {
        let pivots = self.pivots();
        (0..self.ambient)
            .filter(|c| !pivots.contains(c))
            .map(|c| unit_vector(self.ambient, c))
            .collect()
    }

    /// Image of the subspace in `F^m` under the map sending the ambient
    /// basis vector `e_i` to `images[i]`.
    pub fn map(&self, map: &LinearMap<F>) -> Self {
        Self::span_unchecked(map.codomain, self.rows.iter().map(|r| map.apply(r)))
    }

    /// Render as `;`-separated rows of `,`-separated scalars.
    pub fn render(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect()
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "<{}>/{}", rows.join(";"), self.ambient)
    }
}

/// A linear map `F^domain -> F^codomain`, stored as the images of the unit
/// vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap<F> {
    pub domain: usize,
    pub codomain: usize,
    images: Vec<Vector<F>>,
}

impl<F: Field> LinearMap<F> {
    pub fn from_images(codomain: usize, images: Vec<Vector<F>>) -> Self {
        assert!(images.iter().all(|v| v.len() == codomain));
        LinearMap { domain: images.len(), codomain, images }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_images(n, (0..n).map(|i| unit_vector(n, i)).collect())
    }

    pub fn image_of_unit(&self, i: usize) -> &[F] {
        &self.images[i]
    }

    pub fn apply(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.domain);
        let mut out = zero_vector(self.codomain);
        for (c, img) in v.iter().zip(&self.images) {
            axpy(&mut out, c, img);
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(other.codomain, self.domain);
        Self::from_images(self.codomain, other.images.iter().map(|v| self.apply(v)).collect())
    }

    pub fn kernel(&self) -> Subspace<F> {
        let basis = left_null_space(&self.images, self.codomain);
        Subspace::span_unchecked(self.domain, basis)
    }

    pub fn image(&self) -> Subspace<F> {
        Subspace::span_unchecked(self.codomain, self.images.iter().cloned())
    }

    /// `self - c * id`, for square maps.
    pub fn shift(&self, c: &F) -> Self {
        assert_eq!(self.domain, self.codomain);
        let mut images = self.images.clone();
        for (i, v) in images.iter_mut().enumerate() {
            v[i] -= c.clone();
        }
        Self::from_images(self.codomain, images)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.domain);
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Matrix entry `(row, col)`: coefficient of `e_row` in the image of `e_col`.
    pub fn entry(&self, row: usize, col: usize) -> &F {
        &self.images[col][row]
    }

    pub fn trace(&self) -> F {
        (0..self.domain).fold(F::zero(), |acc, i| acc + self.images[i][i].clone())
    }

    /// Characteristic polynomial `det(t I - M)`, coefficients from the
    /// constant term up. Hessenberg reduction followed by the standard
    /// recurrence; valid over every field.
    pub fn charpoly(&self) -> Vec<F> {
        assert_eq!(self.domain, self.codomain);
        let n = self.domain;
        let mut h: Vec<Vec<F>> = (0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c).clone()).collect())
            .collect();
        for j in 0..n.saturating_sub(2) {
            let r = j + 1;
            let Some(i) = (r..n).find(|&i| !h[i][j].is_zero()) else {
                continue;
            };
            if i != r {
                h.swap(i, r);
                for row in h.iter_mut() {
                    row.swap(i, r);
                }
            }
            let pivot = h[r][j].clone();
            for i in r + 1..n {
                if h[i][j].is_zero() {
                    continue;
                }
                let u = h[i][j].clone() / pivot.clone();
                let row_r = h[r].clone();
                let neg = -u.clone();
                axpy(&mut h[i], &neg, &row_r);
                for row in h.iter_mut() {
                    let add = u.clone() * row[i].clone();
                    row[r] += add;
                }
            }
        }
        let mut polys: Vec<Vec<F>> = vec![vec![F::one()]];
        for m in 1..=n {
            // (t - h[m-1][m-1]) p_{m-1}
            let prev = &polys[m - 1];
            let mut p = vec![F::zero(); m + 1];
            for (k, c) in prev.iter().enumerate() {
                p[k + 1] += c.clone();
                p[k] -= h[m - 1][m - 1].clone() * c.clone();
            }
            let mut t = F::one();
            for i in 1..m {
                t *= h[m - i][m - i - 1].clone();
                let coeff = t.clone() * h[m - i - 1][m - 1].clone();
                if coeff.is_zero() {
                    continue;
                }
                for (k, c) in polys[m - i - 1].iter().enumerate() {
                    p[k] -= coeff.clone() * c.clone();
                }
            }
            polys.push(p);
        }
        polys.pop().expect("nonempty")
    }

    /// Distinct eigenvalues lying in the field.
    pub fn eigenvalues(&self) -> Vec<F> {
        F::roots(&self.charpoly())
    }
}

/// Coordinates relative to an arbitrary list of independent vectors.
#[derive(Clone, Debug)]
pub struct Basis<F> {
    vectors: Vec<Vector<F>>,
    echelon: Vec<Vector<F>>,
    pivots: Vec<usize>,
    transform: Vec<Vector<F>>,
}

impl<F: Field> Basis<F> {
    /// Returns `None` if the vectors are dependent.
    pub fn new(ambient: usize, vectors: Vec<Vector<F>>) -> Option<Self> {
        let d = vectors.len();
        let mut aug: Vec<Vector<F>> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut row = v.clone();
                row.extend(unit_vector::<F>(d, i));
                row
            })
            .collect();
        let pivots = rref(&mut aug, ambient);
        if pivots.len() < d {
            return None;
        }
        let echelon = aug.iter().map(|r| r[..ambient].to_vec()).collect();
        let transform = aug.iter().map(|r| r[ambient..].to_vec()).collect();
        Some(Basis { vectors, echelon, pivots, transform })
    }

    pub fn vectors(&self) -> &[Vector<F>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn coordinates(&self, v: &[F]) -> Option<Vector<F>> {
        let mut rem = v.to_vec();
        for (row, &p) in self.echelon.iter().zip(&self.pivots) {
            if !rem[p].is_zero() {
                let c = -rem[p].clone();
                axpy(&mut rem, &c, row);
            }
        }
        if !is_zero_vector(&rem) {
            return None;
        }
        let d = self.vectors.len();
        let mut x = zero_vector(d);
        for (row, &p) in self.transform.iter().zip(&self.pivots) {
            axpy(&mut x, &v[p], row);
        }
        Some(x)
    }

    pub fn combine(&self, coords: &[F]) -> Vector<F> {
        let n = self.vectors.first().map_or(0, |v| v.len());
        let mut v = zero_vector(n);
        for (c, b) in coords.iter().zip(&self.vectors) {
            axpy(&mut v, c, b);
        }
        v
    }
}

/// Projection `W -> W/A` together with a section `W/A -> W`.
///
/// The quotient is coordinatized by a complement of `A` in `W` spanned by
/// basis rows of `W` on non-pivot positions of `A` (in `W`-coordinates); when
/// `W` is the whole space these are unit vectors.
#[derive(Clone)]
pub struct QuotientMap<F> {
    ambient: Subspace<F>,
    kernel: Subspace<F>,
    /// `A` expressed in the coordinates of `W`.
    kernel_coords: Subspace<F>,
    free: Vec<usize>,
    complement: Vec<Vector<F>>,
}

impl<F: Field> QuotientMap<F> {
    pub fn new(ambient: &Subspace<F>, kernel: &Subspace<F>) -> Result<Self, LinalgError> {
        if !kernel.leq(ambient) {
            return Err(LinalgError::NotContained);
        }
        let dw = ambient.dim();
        let kernel_coords = Subspace::span_unchecked(
            dw,
            kernel
                .basis()
                .iter()
                .map(|v| ambient.coordinates(v).expect("contained")),
        );
        let pivots = kernel_coords.pivots();
        let free: Vec<usize> = (0..dw).filter(|c| !pivots.contains(c)).collect();
        let complement = free.iter().map(|&c| ambient.basis()[c].clone()).collect();
        Ok(QuotientMap {
            ambient: ambient.clone(),
            kernel: kernel.clone(),
            kernel_coords,
            free,
            complement,
        })
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn kernel(&self) -> &Subspace<F> {
        &self.kernel
    }

    pub fn ambient(&self) -> &Subspace<F> {
        &self.ambient
    }

    /// Representatives in `W` of the quotient basis.
    pub fn complement(&self) -> &[Vector<F>] {
        &self.complement
    }

    pub fn try_project(&self, v: &[F]) -> Option<Vector<F>> {
        let c = self.ambient.coordinates(v)?;
        let r = self.kernel_coords.reduce(&c);
        Some(self.free.iter().map(|&i| r[i].clone()).collect())
    }

    /// Panics if `v` is outside `W`.
    pub fn project(&self, v: &[F]) -> Vector<F> {
        self.try_project(v).expect("vector outside the ambient space of the quotient")
    }

    pub fn lift(&self, w: &[F]) -> Vector<F> {
        assert_eq!(w.len(), self.dim());
        let mut v = zero_vector(self.ambient.ambient());
        for (c, t) in w.iter().zip(&self.complement) {
            axpy(&mut v, c, t);
        }
        v
    }

    pub fn project_subspace(&self, s: &Subspace<F>) -> Subspace<F> {
        Subspace::span_unchecked(self.dim(), s.basis().iter().map(|v| self.project(v)))
    }

    /// Full preimage in `W` of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace<F>) -> Subspace<F> {
        Subspace::span_unchecked(
            self.ambient.ambient(),
            s.basis()
                .iter()
                .map(|w| self.lift(w))
                .chain(self.kernel.basis().iter().cloned()),
        )
    }
}

/// Iterator over all `k`-dimensional subspaces of `F^n` for a finite field,
/// ordered lexicographically by pivot pattern and then by free entries.
pub struct SubspaceIter<F> {
    n: usize,
    elements: Vec<F>,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counters: Vec<usize>,
    done: bool,
}

pub fn enumerate_subspaces<F: Field>(n: usize, k: usize) -> Result<SubspaceIter<F>, LinalgError> {
    let elements = F::elements().ok_or(LinalgError::InfiniteField)?;
    if k > n {
        return Err(LinalgError::DimensionTooLarge { n, k });
    }
    let mut it = SubspaceIter {
        n,
        elements,
        pivots: (0..k).collect(),
        free: Vec::new(),
        counters: Vec::new(),
        done: false,
    };
    it.reset_pattern();
    Ok(it)
}

/// Every subspace of `F^n`, by ascending dimension.
pub fn all_subspaces<F: Field>(n: usize) -> Result<Vec<Subspace<F>>, LinalgError> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_subspaces::<F>(n, k)?);
    }
    Ok(out)
}

impl<F: Field> SubspaceIter<F> {
    fn reset_pattern(&mut self) {
        self.free.clear();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.counters = vec![0; self.free.len()];
    }

    fn next_pattern(&mut self) -> bool {
        let k = self.pivots.len();
        let n = self.n;
        let Some(i) = (0..k).rev().find(|&i| self.pivots[i] < n - k + i) else {
            return false;
        };
        self.pivots[i] += 1;
        for j in i + 1..k {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        self.reset_pattern();
        true
    }

    fn current(&self) -> Subspace<F> {
        let mut rows: Vec<Vector<F>> = self.pivots.iter().map(|&p| unit_vector(self.n, p)).collect();
        for (&(r, c), &idx) in self.free.iter().zip(&self.counters) {
            rows[r][c] = self.elements[idx].clone();
        }
        Subspace { ambient: self.n, rows }
    }

    fn advance(&mut self) {
        let q = self.elements.len();
        for i in (0..self.counters.len()).rev() {
            self.counters[i] += 1;
            if self.counters[i] < q {
                return;
            }
            self.counters[i] = 0;
        }
        if !self.next_pattern() {
            self.done = true;
        }
    }
}

impl<F: Field> Iterator for SubspaceIter<F> {
    type Item = Subspace<F>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let s = self.current();
        self.advance();
        Some(s)
    }
}

/// All vectors of `F^n` for a finite field, in lexicographic order.
pub fn all_vectors<F: Field>(n: usize) -> Result<Vec<Vector<F>>, LinalgError> {
    let elements = F::elements().ok_or(LinalgError::InfiniteField)?;
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vector<F>| {
                elements.iter().map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    v
                })
            })
            .collect();
    }
    Ok(out)
}

/// All vectors of a subspace, for a finite field.
pub fn subspace_elements<F: Field>(s: &Subspace<F>) -> Result<Vec<Vector<F>>, LinalgError> {
    Ok(all_vectors::<F>(s.dim())?
        .into_iter()
        .map(|c| s.combine(&c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rational};
    use proptest::prelude::*;

    type F2 = Gf<2>;
    type F3 = Gf<3>;

    fn v2(xs: &[u32]) -> Vector<F2> {
        xs.iter().map(|&x| F2::new(x)).collect()
    }

    fn v3(xs: &[u32]) -> Vector<F3> {
        xs.iter().map(|&x| F3::new(x)).collect()
    }

    fn vq(xs: &[i64]) -> Vector<Rational> {
        xs.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    /// Gaussian binomial coefficient by the product formula.
    fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= q.pow(n - i) - 1;
            den *= q.pow(i + 1) - 1;
        }
        num / den
    }

    #[test]
    fn span_examples() {
        let s = Subspace::span(2, [v2(&[1, 0]), v2(&[1, 1])]).unwrap();
        assert!(s.is_full());
        assert!(Subspace::<F2>::span(3, []).unwrap().is_zero());
        let s = Subspace::span(2, [vq(&[2, 4])]).unwrap();
        assert_eq!(s.basis(), &[vq(&[1, 2])]);
        assert!(matches!(
            Subspace::span(2, [vq(&[1, 2]), vq(&[1])]),
            Err(LinalgError::Ragged { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn lines_in_the_plane() {
        let a = Subspace::line(v2(&[1, 0]));
        let b = Subspace::line(v2(&[1, 1]));
        assert!(a.intersect(&b).is_zero());
        assert!(a.sum(&b).is_full());
        assert_eq!(a.intersect(&a), a);
    }

    #[test]
    #[should_panic(expected = "different dimension")]
    fn ambient_mismatch_panics() {
        let a = Subspace::<F2>::full(2);
        let b = Subspace::<F2>::full(3);
        let _ = a.sum(&b);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_subspaces::<F3>(3, 1).unwrap().count(), 13);
        let zero: Vec<_> = enumerate_subspaces::<F3>(3, 0).unwrap().collect();
        assert_eq!(zero, vec![Subspace::zero(3)]);
        assert_eq!(all_subspaces::<F2>(2).unwrap().len(), 5);
        assert!(matches!(
            enumerate_subspaces::<Rational>(2, 1),
            Err(LinalgError::InfiniteField)
        ));
    }

    fn check_counts<F: Field>(q: u64) {
        for n in 0..=4usize {
            for k in 0..=n {
                let all: Vec<_> = enumerate_subspaces::<F>(n, k).unwrap().collect();
                assert_eq!(all.len() as u64, gaussian_binomial(n as u32, k as u32, q), "n={n} k={k}");
                let mut dedup = all.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
                assert!(all.windows(2).all(|w| {
                    let (a, b) = (&w[0], &w[1]);
                    a.pivots() < b.pivots() || (a.pivots() == b.pivots() && a.basis() < b.basis())
                }));
                for s in &all {
                    assert_eq!(s.dim(), k);
                    let again = Subspace::span(n, s.basis().to_vec()).unwrap();
                    assert_eq!(&again, s);
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_gaussian_binomials() {
        check_counts::<Gf<2>>(2);
        check_counts::<Gf<3>>(3);
        check_counts::<Gf<5>>(5);
    }

    #[test]
    fn quotient_examples() {
        let full = Subspace::<F2>::full(3);
        let q = QuotientMap::new(&full, &Subspace::zero(3)).unwrap();
        assert_eq!(q.dim(), 3);
        for v in all_vectors::<F2>(3).unwrap() {
            assert_eq!(q.project(&v), v);
        }
        let line = Subspace::line(v2(&[1, 1, 0]));
        let q = QuotientMap::new(&full, &line).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&v2(&[1, 1, 0])), v2(&[0, 0]));
        assert!(matches!(
            QuotientMap::new(&line, &full),
            Err(LinalgError::NotContained)
        ));
    }

    #[test]
    fn charpoly_small() {
        // [[0,1],[-2,3]] has t^2 - 3t + 2
        let m = LinearMap::from_images(2, vec![vq(&[0, -2]), vq(&[1, 3])]);
        assert_eq!(m.charpoly(), vq(&[2, -3, 1]));
        assert_eq!(m.eigenvalues(), vq(&[1, 2]));
        let z = LinearMap::<Rational>::from_images(0, vec![]);
        assert_eq!(z.charpoly(), vq(&[1]));
    }

    fn arb_subspace_f3(n: usize) -> impl Strategy<Value = Subspace<F3>> {
        proptest::collection::vec(proptest::collection::vec(0u32..3, n), 0..=n)
            .prop_map(move |rows| Subspace::span(n, rows.into_iter().map(|r| v3(&r))).unwrap())
    }

    fn rank(rows: Vec<Vector<F3>>, n: usize) -> usize {
        let mut m = rows;
        rref(&mut m, n).len()
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Vec<Vector<Rational>>> {
        proptest::collection::vec(proptest::collection::vec(-3i64..4, n), n)
            .prop_map(|rows| rows.into_iter().map(|r| vq(&r)).collect())
    }

    /// det(t I - M) at t = c by cofactor expansion, an independent oracle.
    fn det(m: &[Vec<Rational>]) -> Rational {
        use num_traits::{One, Zero};
        let n = m.len();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = m[0][j].clone() * det(&minor);
            if j % 2 == 0 { acc += term } else { acc -= term }
        }
        acc
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn modular_law(u in arb_subspace_f3(4), v in arb_subspace_f3(4)) {
            let s = u.sum(&v);
            let i = u.intersect(&v);
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            // direct rank oracle
            let stacked: Vec<_> = u.basis().iter().chain(v.basis()).cloned().collect();
            prop_assert_eq!(s.dim(), rank(stacked, 4));
            prop_assert!(i.leq(&u) && i.leq(&v) && u.leq(&s) && v.leq(&s));
        }

        #[test]
        fn lattice_laws(a in arb_subspace_f3(3), b in arb_subspace_f3(3), c in arb_subspace_f3(3)) {
            prop_assert_eq!(a.sum(&b), b.sum(&a));
            prop_assert_eq!(a.intersect(&b), b.intersect(&a));
            prop_assert_eq!(a.sum(&b).sum(&c), a.sum(&b.sum(&c)));
            prop_assert_eq!(a.intersect(&b).intersect(&c), a.intersect(&b.intersect(&c)));
            prop_assert_eq!(a.sum(&a.intersect(&b)), a.clone());
            prop_assert_eq!(a.intersect(&a.sum(&b)), a.clone());
        }

        #[test]
        fn projection_after_section_is_identity(
            w in arb_subspace_f3(4),
            a in arb_subspace_f3(4),
            coords in proptest::collection::vec(0u32..3, 4),
        ) {
            let kernel = a.intersect(&w);
            let q = QuotientMap::new(&w, &kernel).unwrap();
            prop_assert_eq!(q.dim(), w.dim() - kernel.dim());
            let x = v3(&coords[..q.dim()]);
            prop_assert_eq!(q.project(&q.lift(&x)), x);
            for k in kernel.basis() {
                prop_assert!(is_zero_vector(&q.project(k)));
            }
            prop_assert_eq!(q.preimage(&Subspace::zero(q.dim())), kernel.clone());
            prop_assert_eq!(q.preimage(&Subspace::full(q.dim())), w.clone());
        }

        #[test]
        fn charpoly_matches_determinant(m in arb_matrix(4), t in -3i64..4) {
            let map = LinearMap::from_images(4, (0..4).map(|c| (0..4).map(|r| m[r][c].clone()).collect()).collect());
            let p = map.charpoly();
            let tq = Rational::from_i64(t);
            let value = p.iter().rev().fold(Rational::from_i64(0), |acc, c| acc * tq.clone() + c.clone());
            let shifted: Vec<Vec<Rational>> = (0..4).map(|r| (0..4).map(|c| {
                let d = if r == c { tq.clone() } else { Rational::from_i64(0) };
                d - m[r][c].clone()
            }).collect()).collect();
            prop_assert_eq!(value, det(&shifted));
        }

        #[test]
        fn basis_coordinates_roundtrip(rows in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 1..4),
                                       coords in proptest::collection::vec(0u32..3, 4)) {
            let vs: Vec<_> = rows.iter().map(|r| v3(r)).collect();
            if let Some(b) = Basis::new(4, vs.clone()) {
                let c = v3(&coords[..b.len()]);
                let v = b.combine(&c);
                prop_assert_eq!(b.coordinates(&v), Some(c));
            }
        }
    }
}
