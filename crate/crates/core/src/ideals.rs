//! Ideals, cores, subideal chains, minimal ideals, Frattini and Cartan
//! subalgebras.
//!
//! All ideals are two-sided. Searches that need the full subspace lattice
//! require a finite field and run in the fixed lexicographic subspace order,
//! so first-found witnesses are deterministic.

use serde::Serialize;

use crate::algebra::{AlgebraError, LeibnizAlgebra};
use crate::field::Field;
use crate::linalg::{all_subspaces, is_zero_vector, LinearMap, Subspace, Vector};
use crate::verdict::{Method, Verdict};

pub fn is_ideal<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> bool {
    l.is_ideal(b)
}

pub fn is_subalgebra<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> bool {
    l.is_subalgebra(b)
}

/// `A` is a two-sided ideal of the subalgebra `B`.
pub fn is_ideal_in<F: Field>(l: &LeibnizAlgebra<F>, a: &Subspace<F>, b: &Subspace<F>) -> bool {
    a.leq(b) && l.two_sided(a, b).leq(a)
}

/// Largest ideal of `L` inside `B`.
pub fn core<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> Subspace<F> {
    let full = l.full();
    let mut x = b.clone();
    loop {
        let next = l.transporter(&x, &full, &x);
        if next == x {
            return x;
        }
        x = next;
    }
}

/// Smallest ideal of the subalgebra `within` containing `s`.
pub fn ideal_closure_in<F: Field>(
    l: &LeibnizAlgebra<F>,
    s: &Subspace<F>,
    within: &Subspace<F>,
) -> Subspace<F> {
    let mut x = s.clone();
    loop {
        let next = x.sum(&l.two_sided(&x, within));
        if next == x {
            return x;
        }
        x = next;
    }
}

/// Smallest ideal of `L` containing `s`.
pub fn ideal_closure<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> Subspace<F> {
    ideal_closure_in(l, s, &l.full())
}

/// Smallest subalgebra containing `s`.
pub fn subalgebra_closure<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> Subspace<F> {
    let mut x = s.clone();
    loop {
        let next = x.sum(&l.bracket_spaces(&x, &x));
        if next == x {
            return x;
        }
        x = next;
    }
}

/// `B = links[0] ⊂ links[1] ⊂ ... ⊂ links[t] = L`, each link an ideal of the
/// next.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubidealChain<F: Field> {
    pub links: Vec<Subspace<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("empty chain")]
    Empty,
    #[error("chain does not end at L")]
    DoesNotReachL,
    #[error("link {0} is not strictly contained in the next link")]
    NotIncreasing(usize),
    #[error("link {0} is not a subalgebra")]
    NotSubalgebra(usize),
    #[error("link {0} is not an ideal of the next link")]
    NotIdealOfNext(usize),
}

impl<F: Field> SubidealChain<F> {
    pub fn bottom(&self) -> &Subspace<F> {
        &self.links[0]
    }

    /// Number of ideal steps.
    pub fn length(&self) -> usize {
        self.links.len() - 1
    }

    pub fn validate(&self, l: &LeibnizAlgebra<F>) -> Result<(), ChainError> {
        let last = self.links.last().ok_or(ChainError::Empty)?;
        if !last.is_full() || last.ambient() != l.dim() {
            return Err(ChainError::DoesNotReachL);
        }
        for (i, link) in self.links.iter().enumerate() {
            if !l.is_subalgebra(link) {
                return Err(ChainError::NotSubalgebra(i));
            }
        }
        for (i, w) in self.links.windows(2).enumerate() {
            if !w[0].lt_strict(&w[1]) {
                return Err(ChainError::NotIncreasing(i));
            }
            if !is_ideal_in(l, &w[0], &w[1]) {
                return Err(ChainError::NotIdealOfNext(i));
            }
        }
        Ok(())
    }
}

/// Subideal test by the descending series `C_0 = L`,
/// `C_{k+1} = ideal closure of B in C_k`. Every term is an ideal of the
/// previous one and lies inside the corresponding term of any chain from `B`
/// to `L`, so `B` is a subideal exactly when the series reaches `B`; the
/// series is then a witnessing chain.
pub fn is_subideal<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Result<Option<SubidealChain<F>>, AlgebraError> {
    if !l.is_subalgebra(b) {
        return Err(AlgebraError::NotSubalgebra);
    }
    Ok(subideal_chain_unchecked(l, b))
}

pub(crate) fn subideal_chain_unchecked<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Option<SubidealChain<F>> {
    let mut links = vec![l.full()];
    loop {
        let current = links.last().expect("nonempty");
        if current == b {
            links.reverse();
            return Some(SubidealChain { links });
        }
        let next = ideal_closure_in(l, b, current);
        if &next == current {
            return None;
        }
        links.push(next);
    }
}

/// `N_0 = B`, `N_{k+1} = N_L(N_k)`, up to stabilization.
pub fn idealizer_series<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> Vec<Subspace<F>> {
    let full = l.full();
    let mut out = vec![b.clone()];
    loop {
        let last = out.last().expect("nonempty");
        let next = l.normalizer(&full, last);
        if &next == last {
            return out;
        }
        out.push(next);
    }
}

/// The idealizer-series criterion: a chain when the series reaches `L`.
/// Sufficient for subideals but not necessary; see [`is_subideal`].
pub fn idealizer_chain<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> Option<SubidealChain<F>> {
    let links = idealizer_series(l, b);
    links.last().is_some_and(|s| s.is_full()).then_some(SubidealChain { links })
}

/// Every subspace of `L` satisfying `keep`, finite fields only.
pub fn subspaces_where<F: Field>(
    l: &LeibnizAlgebra<F>,
    what: &'static str,
    keep: impl Fn(&Subspace<F>) -> bool,
) -> Result<Vec<Subspace<F>>, AlgebraError> {
    if !F::is_finite() {
        return Err(AlgebraError::InfiniteField(what));
    }
    Ok(all_subspaces::<F>(l.dim())?.into_iter().filter(|s| keep(s)).collect())
}

/// A list of ideals; `complete` means it is every ideal of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSet<F: Field> {
    pub ideals: Vec<Subspace<F>>,
    pub complete: bool,
}

pub fn all_ideals<F: Field>(l: &LeibnizAlgebra<F>) -> Result<IdealSet<F>, AlgebraError> {
    let ideals = subspaces_where(l, "ideal enumeration", |s| l.is_ideal(s))?;
    Ok(IdealSet { ideals, complete: true })
}

pub fn all_subalgebras<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Vec<Subspace<F>>, AlgebraError> {
    subspaces_where(l, "subalgebra enumeration", |s| l.is_subalgebra(s))
}

fn minimal_nonzero<F: Field>(family: &[Subspace<F>]) -> Vec<Subspace<F>> {
    family
        .iter()
        .filter(|m| !m.is_zero() && !family.iter().any(|k| !k.is_zero() && k.lt_strict(m)))
        .cloned()
        .collect()
}

fn maximal_proper<F: Field>(family: &[Subspace<F>]) -> Vec<Subspace<F>> {
    family
        .iter()
        .filter(|m| !m.is_full() && !family.iter().any(|k| !k.is_full() && m.lt_strict(k)))
        .cloned()
        .collect()
}

pub fn minimal_ideals<F: Field>(l: &LeibnizAlgebra<F>) -> Result<IdealSet<F>, AlgebraError> {
    let all = all_ideals(l)?;
    Ok(IdealSet { ideals: minimal_nonzero(&all.ideals), complete: true })
}

pub fn is_abelian_subspace<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> bool {
    l.bracket_spaces(s, s).is_zero()
}

/// Joint eigenspaces of all `L_{e_i}` and `R_{e_i}`: every nonzero vector of
/// each returned space spans a one-dimensional ideal, and every
/// one-dimensional ideal lies in one of them. Complete over every supported
/// field because eigenvalues are found exactly.
pub fn one_dim_ideal_spaces<F: Field>(l: &LeibnizAlgebra<F>) -> Vec<Subspace<F>> {
    let n = l.dim();
    let mut ops = Vec::with_capacity(2 * n);
    for i in 0..n {
        let e = l.basis_vector(i);
        ops.push(l.left_mult(&e));
        ops.push(l.right_mult(&e));
    }
    let mut spaces = vec![l.full()];
    for op in &ops {
        let eig = op.eigenvalues();
        let mut next = Vec::new();
        for w in &spaces {
            for lambda in &eig {
                let s = w.intersect(&op.shift(lambda).kernel());
                if !s.is_zero() {
                    next.push(s);
                }
            }
        }
        spaces = next;
        if spaces.is_empty() {
            break;
        }
    }
    if n == 0 {
        return Vec::new();
    }
    spaces.sort();
    spaces
}

/// Right-multiplication eigenvalue functional of a joint eigenspace:
/// `[v, e_i] = mu_i v` for all `v` in it.
fn right_eigenvalues<F: Field>(l: &LeibnizAlgebra<F>, w: &Subspace<F>) -> Vec<F> {
    let v = &w.basis()[0];
    let p = v.iter().position(|c| !c.is_zero()).expect("nonzero");
    (0..l.dim())
        .map(|i| l.bracket(v, &l.basis_vector(i))[p].clone() / v[p].clone())
        .collect()
}

/// Sum of the abelian one-dimensional ideals.
pub fn abelian_line_ideals_sum<F: Field>(l: &LeibnizAlgebra<F>) -> Subspace<F> {
    let n = l.dim();
    let mut acc = Subspace::zero(n);
    for w in one_dim_ideal_spaces(l) {
        // v^2 = mu(v) v, so the abelian lines of w fill w ∩ ker mu
        let mu = right_eigenvalues(l, &w);
        let functional = LinearMap::from_images(1, mu.into_iter().map(|c| vec![c]).collect());
        acc = acc.sum(&w.intersect(&functional.kernel()));
    }
    acc
}

/// Sum of the minimal abelian ideals.
///
/// Exhaustive over finite fields. Over the rationals the answer is certified
/// when every minimal ideal is known to be one-dimensional (supersolvable
/// algebras) or when `L` is simple; otherwise `Unknown`, with the sum of the
/// abelian one-dimensional ideals as a lower bound in the note.
pub fn asoc<F: Field>(l: &LeibnizAlgebra<F>) -> Verdict<Subspace<F>> {
    if F::is_finite() {
        let minimal = minimal_ideals(l).expect("finite field");
        let mut acc = l.zero_space();
        for m in minimal.ideals.iter().filter(|m| is_abelian_subspace(l, m)) {
            acc = acc.sum(m);
        }
        return Verdict::yes(Method::Exhaustive, acc);
    }
    let lines = abelian_line_ideals_sum(l);
    if crate::structure::is_supersolvable(l).is_true() {
        return Verdict::yes(Method::Structural, lines)
            .with_note("supersolvable: minimal ideals are one-dimensional");
    }
    if crate::structure::is_simple(l).is_true() {
        let i = l.kernel();
        return Verdict::yes(Method::Structural, i).with_note("simple: minimal ideals are I or L");
    }
    Verdict::unknown(format!("lower bound {}", l.render_subspace(&lines)))
}

pub fn is_nilpotent_subalgebra<F: Field>(l: &LeibnizAlgebra<F>, h: &Subspace<F>) -> bool {
    let mut x = h.clone();
    for _ in 0..=h.dim() {
        if x.is_zero() {
            return true;
        }
        let next = l.bracket_spaces(&x, h);
        if next == x {
            return false;
        }
        x = next;
    }
    x.is_zero()
}

pub fn is_solvable_subalgebra<F: Field>(l: &LeibnizAlgebra<F>, h: &Subspace<F>) -> bool {
    let mut x = h.clone();
    for _ in 0..=h.dim() {
        if x.is_zero() {
            return true;
        }
        let next = l.bracket_spaces(&x, &x);
        if next == x {
            return false;
        }
        x = next;
    }
    x.is_zero()
}

pub fn maximal_subalgebras<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Vec<Subspace<F>>, AlgebraError> {
    Ok(maximal_proper(&all_subalgebras(l)?))
}

/// Maximal subalgebras of the subalgebra `c`, as subspaces of `L`.
pub fn maximal_subalgebras_of<F: Field>(
    l: &LeibnizAlgebra<F>,
    c: &Subspace<F>,
) -> Result<Vec<Subspace<F>>, AlgebraError> {
    let subs = subspaces_where(l, "subalgebra enumeration", |s| s.leq(c) && l.is_subalgebra(s))?;
    Ok(subs
        .iter()
        .filter(|m| m.lt_strict(c) && !subs.iter().any(|k| m.lt_strict(k) && k.lt_strict(c)))
        .cloned()
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frattini<F: Field> {
    /// Intersection of the maximal subalgebras.
    pub subalgebra: Subspace<F>,
    /// Its core.
    pub ideal: Subspace<F>,
}

/// Frattini subalgebra of the subalgebra `c` by enumeration.
pub fn frattini_of<F: Field>(
    l: &LeibnizAlgebra<F>,
    c: &Subspace<F>,
) -> Result<Subspace<F>, AlgebraError> {
    let max = maximal_subalgebras_of(l, c)?;
    Ok(max.iter().fold(c.clone(), |acc, m| acc.intersect(m)))
}

/// `F(L)` and `phi(L)`. Exhaustive over finite fields; for nilpotent `L`
/// over any field `F(L) = L^2`.
pub fn frattini<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Frattini<F>, AlgebraError> {
    let f = if F::is_finite() {
        frattini_of(l, &l.full())?
    } else if l.is_nilpotent() {
        l.derived()
    } else {
        return Err(AlgebraError::InfiniteField("Frattini of a non-nilpotent algebra"));
    };
    let ideal = core(l, &f);
    Ok(Frattini { subalgebra: f, ideal })
}

/// `F(L) = L^2` for nilpotent `L`.
pub fn frattini_nilpotent<F: Field>(l: &LeibnizAlgebra<F>) -> Option<Subspace<F>> {
    l.is_nilpotent().then(|| l.derived())
}

/// Subalgebras maximal among nilpotent subalgebras.
pub fn maximal_nilpotent_subalgebras<F: Field>(
    l: &LeibnizAlgebra<F>,
) -> Result<Vec<Subspace<F>>, AlgebraError> {
    let nil = subspaces_where(l, "nilpotent subalgebra enumeration", |s| {
        l.is_subalgebra(s) && is_nilpotent_subalgebra(l, s)
    })?;
    Ok(nil.iter().filter(|m| !nil.iter().any(|k| m.lt_strict(k))).cloned().collect())
}

pub fn is_cartan<F: Field>(l: &LeibnizAlgebra<F>, h: &Subspace<F>) -> bool {
    is_cartan_in(l, h, &l.full())
}

/// `h` is a Cartan subalgebra of the subalgebra `home`.
pub fn is_cartan_in<F: Field>(l: &LeibnizAlgebra<F>, h: &Subspace<F>, home: &Subspace<F>) -> bool {
    h.leq(home)
        && l.is_subalgebra(h)
        && is_nilpotent_subalgebra(l, h)
        && &l.normalizer(home, h) == h
}

/// Fitting null component `ker R_x^n`.
pub fn fitting_null_component<F: Field>(l: &LeibnizAlgebra<F>, x: &[F]) -> Subspace<F> {
    l.right_mult(x).pow(l.dim()).kernel()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSearch<F: Field> {
    pub found: Vec<Subspace<F>>,
    /// Every Cartan subalgebra is listed.
    pub complete: bool,
}

/// Cartan subalgebras. Exhaustive over finite fields; otherwise Fitting null
/// components of candidate elements (the `hints`, basis vectors and small
/// combinations of pairs), each verified before it is reported.
pub fn cartan_subalgebras<F: Field>(l: &LeibnizAlgebra<F>, hints: &[Vector<F>]) -> CartanSearch<F> {
    if F::is_finite() {
        let found = subspaces_where(l, "Cartan enumeration", |s| is_cartan(l, s)).expect("finite");
        return CartanSearch { found, complete: true };
    }
    let n = l.dim();
    let mut candidates: Vec<Vector<F>> = hints.to_vec();
    for i in 0..n {
        candidates.push(l.basis_vector(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            for c in [1, -1, 2] {
                let mut v = l.basis_vector(i);
                v[j] = F::from_i64(c);
                candidates.push(v);
            }
        }
    }
    let mut found: Vec<Subspace<F>> = Vec::new();
    for x in candidates.iter().filter(|x| !is_zero_vector(x)) {
        let c = fitting_null_component(l, x);
        if !found.contains(&c) && is_cartan(l, &c) {
            found.push(c);
        }
    }
    CartanSearch { found, complete: false }
}

/// Data for composing a Cartan subalgebra from a Levi decomposition
/// `L = R ∔ S`.
#[derive(Clone, Debug)]
pub struct LeviData<F: Field> {
    pub levi: Subspace<F>,
    pub radical: Subspace<F>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CompositionFailure {
    BadLeviData(String),
    HNotCartanInS,
    BNotCartanInCentralizer,
    SumNotCartan,
}

/// Checks `L = R ∔ S` with `R` an ideal and `S` a subalgebra.
pub fn check_levi<F: Field>(l: &LeibnizAlgebra<F>, d: &LeviData<F>) -> Result<(), String> {
    if !l.is_ideal(&d.radical) {
        return Err("R is not an ideal".into());
    }
    if !l.is_subalgebra(&d.levi) {
        return Err("S is not a subalgebra".into());
    }
    if !d.radical.intersect(&d.levi).is_zero() || !d.radical.sum(&d.levi).is_full() {
        return Err("L is not R ∔ S".into());
    }
    if !is_solvable_subalgebra(l, &d.radical) {
        return Err("R is not solvable".into());
    }
    Ok(())
}

/// `H + B` for `H` Cartan in `S` and `B` Cartan in `C_R(H)`; returns the sum
/// once it is verified Cartan in `L`.
pub fn cartan_compose<F: Field>(
    l: &LeibnizAlgebra<F>,
    levi: &LeviData<F>,
    h: &Subspace<F>,
    b: &Subspace<F>,
) -> Result<Subspace<F>, CompositionFailure> {
    check_levi(l, levi).map_err(CompositionFailure::BadLeviData)?;
    if !is_cartan_in(l, h, &levi.levi) {
        return Err(CompositionFailure::HNotCartanInS);
    }
    let c = l.centralizer(&levi.radical, h);
    if !is_cartan_in(l, b, &c) {
        return Err(CompositionFailure::BNotCartanInCentralizer);
    }
    let sum = h.sum(b);
    if !is_cartan(l, &sum) {
        return Err(CompositionFailure::SumNotCartan);
    }
    Ok(sum)
}
