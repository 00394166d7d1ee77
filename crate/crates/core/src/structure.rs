//! Global structure: supersolvability, simplicity, cyclicity, almost abelian
//! algebras and the two-case shape of algebras all of whose lines are
//! c-ideals.

use serde::Serialize;

use crate::algebra::{AlgebraError, LeibnizAlgebra};
use crate::cideal;
use crate::field::Field;
use crate::ideals::{self, is_abelian_subspace, one_dim_ideal_spaces, subalgebra_closure};
use crate::linalg::{all_vectors, is_zero_vector, LinearMap, Subspace, Vector};
use crate::verdict::{Method, Verdict};

/// A complete flag `0 = A_0 ⊂ A_1 ⊂ ... ⊂ A_n = L` of ideals, found by
/// lifting a flag of `L/A` over a one-dimensional ideal `A`. Complete over
/// every supported field because one-dimensional ideals are found exactly.
pub fn is_supersolvable<F: Field>(l: &LeibnizAlgebra<F>) -> Verdict<Vec<Subspace<F>>> {
    match flag(l) {
        Some(f) => Verdict::yes(Method::Structural, f),
        None => Verdict::no(Method::Structural, "a quotient has no one-dimensional ideal"),
    }
}

fn flag<F: Field>(l: &LeibnizAlgebra<F>) -> Option<Vec<Subspace<F>>> {
    let n = l.dim();
    if n == 0 {
        return Some(vec![l.zero_space()]);
    }
    let spaces = one_dim_ideal_spaces(l);
    let a = Subspace::line(spaces.first()?.basis()[0].clone());
    let (q, map) = l.quotient(&a).expect("line ideal");
    let upper = flag(&q)?;
    let mut out = vec![l.zero_space()];
    out.extend(upper.iter().map(|s| map.preimage(s)));
    Some(out)
}

/// Which extra condition accompanies "the only ideals are 0, I and L".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SimplicityConvention {
    /// `L^2 ≠ I`.
    Standard,
    /// `L^2 ≠ 0` and `dim L > 1`.
    Literal,
}

fn nondegenerate<F: Field>(l: &LeibnizAlgebra<F>, conv: SimplicityConvention) -> bool {
    match conv {
        SimplicityConvention::Standard => l.derived() != l.kernel(),
        SimplicityConvention::Literal => !l.derived().is_zero() && l.dim() > 1,
    }
}

pub fn is_simple<F: Field>(l: &LeibnizAlgebra<F>) -> Verdict<()> {
    is_simple_with(l, SimplicityConvention::Standard)
}

/// Exhaustive over finite fields. Over the rationals: false certificates from
/// canonical ideals and one-dimensional ideals; true when `L/I` has a
/// nondegenerate Killing form and one-dimensional centroid and `I` is
/// irreducible (decided for `dim I <= 3`).
pub fn is_simple_with<F: Field>(l: &LeibnizAlgebra<F>, conv: SimplicityConvention) -> Verdict<()> {
    if !nondegenerate(l, conv) {
        return Verdict::no(Method::Structural, "degenerate");
    }
    let i = l.kernel();
    let allowed = |s: &Subspace<F>| s.is_zero() || s.is_full() || *s == i;
    if F::is_finite() {
        let ideals = ideals::all_ideals(l).expect("finite");
        return match ideals.ideals.iter().find(|s| !allowed(s)) {
            Some(s) => Verdict::no(Method::Exhaustive, format!("ideal {}", l.render_subspace(s))),
            None => Verdict::yes_bare(Method::Exhaustive, "ideals are 0, I, L"),
        };
    }
    let mut canonical = l.derived_series();
    canonical.extend(l.lower_central_series());
    canonical.push(l.center());
    for w in one_dim_ideal_spaces(l) {
        canonical.push(Subspace::line(w.basis()[0].clone()));
    }
    if let Some(s) = canonical.iter().find(|s| !allowed(s)) {
        return Verdict::no(Method::Structural, format!("ideal {}", l.render_subspace(s)));
    }
    if conv == SimplicityConvention::Literal && l.derived() == i {
        return Verdict::unknown("L/I abelian under the literal convention");
    }
    let (lie, _) = l.quotient(&i).expect("I is an ideal");
    let killing = killing_form(&lie);
    if killing_is_degenerate(&killing) {
        // char 0: a nonzero solvable radical of L/I gives an ideal between I and L
        return Verdict::no(Method::Structural, "degenerate Killing form on L/I");
    }
    if centroid_dim(&lie) != 1 {
        return Verdict::unknown("L/I semisimple with centroid of dimension > 1");
    }
    if i.is_zero() {
        return Verdict::yes_bare(Method::Structural, "central simple Lie algebra");
    }
    if l.bracket_spaces(&i, &l.full()).is_zero() {
        return Verdict::unknown("I central");
    }
    match irreducible_kernel(l, &i) {
        Some(true) => Verdict::yes_bare(Method::Structural, "L/I central simple, I irreducible"),
        Some(false) => Verdict::no(Method::Structural, "I has a proper invariant subspace"),
        None => Verdict::unknown("irreducibility of I undecided"),
    }
}

/// Gram matrix of `tr(R_x R_y)` on the basis.
pub fn killing_form<F: Field>(l: &LeibnizAlgebra<F>) -> Vec<Vec<F>> {
    let n = l.dim();
    let r: Vec<LinearMap<F>> = (0..n).map(|i| l.right_mult(&l.basis_vector(i))).collect();
    (0..n).map(|i| (0..n).map(|j| r[i].compose(&r[j]).trace()).collect()).collect()
}

fn killing_is_degenerate<F: Field>(g: &[Vec<F>]) -> bool {
    let n = g.len();
    let mut m = g.to_vec();
    crate::linalg::rref(&mut m, n).len() < n
}

/// Dimension of `{T : T[x,y] = [Tx,y] = [x,Ty]}`.
pub fn centroid_dim<F: Field>(l: &LeibnizAlgebra<F>) -> usize {
    let n = l.dim();
    let t = l.table();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for c in 0..n {
                let mut a = vec![F::zero(); n * n];
                let mut b = vec![F::zero(); n * n];
                for (k, pk) in t.product(i, j).iter().enumerate() {
                    a[k * n + c] += pk.clone();
                    b[k * n + c] += pk.clone();
                }
                for k in 0..n {
                    a[i * n + k] -= t.get(k, j, c).clone();
                    b[j * n + k] -= t.get(i, k, c).clone();
                }
                rows.push(a);
                rows.push(b);
            }
        }
    }
    crate::linalg::null_space(&rows, n * n).len()
}

/// Whether `I` has no proper nonzero subspace invariant under all right
/// multiplications; decided through eigenvectors of the action and its dual
/// when `dim I <= 3`.
fn irreducible_kernel<F: Field>(l: &LeibnizAlgebra<F>, i: &Subspace<F>) -> Option<bool> {
    let d = i.dim();
    if d == 1 {
        return Some(true);
    }
    if d > 3 {
        return None;
    }
    let ops: Vec<LinearMap<F>> = (0..l.dim())
        .map(|k| {
            let e = l.basis_vector(k);
            let images = i
                .basis()
                .iter()
                .map(|v| i.coordinates(&l.bracket(v, &e)).expect("I is an ideal"))
                .collect();
            LinearMap::from_images(d, images)
        })
        .collect();
    let transposed: Vec<LinearMap<F>> = ops
        .iter()
        .map(|m| {
            LinearMap::from_images(d, (0..d).map(|c| (0..d).map(|r| m.entry(c, r).clone()).collect()).collect())
        })
        .collect();
    // a proper invariant subspace has dimension 1 or d - 1 when d <= 3
    Some(!has_common_eigenvector(&ops, d) && !has_common_eigenvector(&transposed, d))
}

fn has_common_eigenvector<F: Field>(ops: &[LinearMap<F>], d: usize) -> bool {
    let mut spaces = vec![Subspace::full(d)];
    for op in ops {
        let eig = op.eigenvalues();
        spaces = spaces
            .iter()
            .flat_map(|w| eig.iter().map(move |c| w.intersect(&op.shift(c).kernel())))
            .filter(|s| !s.is_zero())
            .collect();
    }
    !spaces.is_empty()
}

/// Weakly c-simple: the only weak c-ideals are `0`, `I` and `L`, together
/// with the nondegeneracy clause of the chosen convention. Decided by the
/// exhaustive weak c-ideal search, without the simplicity shortcut.
pub fn is_weakly_c_simple_with<F: Field>(
    l: &LeibnizAlgebra<F>,
    conv: SimplicityConvention,
) -> Result<Verdict<()>, AlgebraError> {
    if !nondegenerate(l, conv) {
        return Ok(Verdict::no(Method::Structural, "degenerate"));
    }
    weakly_c_simple_literal(l)
}

pub fn is_weakly_c_simple<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Verdict<()>, AlgebraError> {
    is_weakly_c_simple_with(l, SimplicityConvention::Standard)
}

/// The bare condition on weak c-ideals, with no nondegeneracy clause.
pub fn weakly_c_simple_literal<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Verdict<()>, AlgebraError> {
    let i = l.kernel();
    for b in ideals::all_subalgebras(l)? {
        if b.is_zero() || b.is_full() || b == i {
            continue;
        }
        if cideal::weak_c_exhaustive(l, &b)?.is_true() {
            return Ok(Verdict::no(Method::Exhaustive, format!("weak c-ideal {}", l.render_subspace(&b))));
        }
    }
    Ok(Verdict::yes_bare(Method::Exhaustive, "no other weak c-ideals"))
}

/// A generator `x` with `subalgebra_closure(x) = L`. Exhaustive over finite
/// fields; over the rationals `dim L/L^2 > 1` refutes, otherwise small
/// integer vectors are tried.
pub fn is_cyclic<F: Field>(l: &LeibnizAlgebra<F>) -> Verdict<Vector<F>> {
    let n = l.dim();
    let generates = |x: &Vector<F>| subalgebra_closure(l, &Subspace::line(x.clone())).is_full();
    if n == 0 {
        return Verdict::no(Method::Structural, "zero algebra");
    }
    if l.derived().codim() > 1 {
        return Verdict::no(Method::Structural, "dim L/L^2 > 1");
    }
    if F::is_finite() {
        let all = all_vectors::<F>(n).expect("finite");
        return match all.into_iter().find(|x| !is_zero_vector(x) && generates(x)) {
            Some(x) => Verdict::yes(Method::Exhaustive, x),
            None => Verdict::no(Method::Exhaustive, "no generator"),
        };
    }
    let coeffs: Vec<F> = [0, 1, -1, 2].iter().map(|&c| F::from_i64(c)).collect();
    let mut x = vec![0usize; n];
    loop {
        let v: Vector<F> = x.iter().map(|&k| coeffs[k].clone()).collect();
        if !is_zero_vector(&v) && generates(&v) {
            return Verdict::yes(Method::Certificate, v);
        }
        let Some(pos) = (0..n).rev().find(|&p| x[p] + 1 < coeffs.len()) else {
            return Verdict::unknown("no generator among small integer vectors");
        };
        x[pos] += 1;
        for q in x.iter_mut().skip(pos + 1) {
            *q = 0;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlmostAbelianKind<F: Field> {
    /// `[d,x] = -[x,d] = d`.
    LieType { x: Vector<F>, d: Subspace<F> },
    /// `[d,x] = d`, other products zero.
    NonLieType { x: Vector<F>, d: Subspace<F> },
    None,
}

impl<F: Field> AlmostAbelianKind<F> {
    pub fn is_none(&self) -> bool {
        matches!(self, AlmostAbelianKind::None)
    }

    pub fn is_lie_type(&self) -> bool {
        matches!(self, AlmostAbelianKind::LieType { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlmostAbelianKind::LieType { .. } => "lie-type",
            AlmostAbelianKind::NonLieType { .. } => "non-lie-type",
            AlmostAbelianKind::None => "none",
        }
    }
}

/// In either pattern `D = L^2` (with `D ≠ 0`), so `D` is forced and `x` is
/// determined up to the normalization below; the decision is exact over any
/// field.
pub fn almost_abelian_kind<F: Field>(l: &LeibnizAlgebra<F>) -> AlmostAbelianKind<F> {
    let n = l.dim();
    let d = l.derived();
    if n < 2 || d.dim() != n - 1 || !is_abelian_subspace(l, &d) {
        return AlmostAbelianKind::None;
    }
    let y = d.standard_complement().remove(0);
    let first = &d.basis()[0];
    let p = first.iter().position(|c| !c.is_zero()).expect("nonzero");
    let c = l.bracket(first, &y)[p].clone() / first[p].clone();
    if c.is_zero() || d.basis().iter().any(|v| l.bracket(v, &y) != crate::linalg::scale(&c, v)) {
        return AlmostAbelianKind::None;
    }
    let inv = c.inv().expect("nonzero");
    let y = crate::linalg::scale(&inv, &y);
    let minus = -F::one();
    if d.basis().iter().all(|v| l.bracket(&y, v) == crate::linalg::scale(&minus, v)) {
        // y^2 = 0 is forced: y + d0 squares to y^2 for d0 in D
        if l.in_j(&y) {
            return AlmostAbelianKind::LieType { x: y, d };
        }
        return AlmostAbelianKind::None;
    }
    if d.basis().iter().all(|v| is_zero_vector(&l.bracket(&y, v))) {
        // (y + d0)^2 = y^2 + d0, so x = y - y^2 squares to zero
        let x = crate::linalg::sub(&y, &l.square(&y));
        return AlmostAbelianKind::NonLieType { x, d };
    }
    AlmostAbelianKind::None
}

/// The same decision by enumerating hyperplanes `D` and lines `Fx`.
pub fn almost_abelian_kind_exhaustive<F: Field>(
    l: &LeibnizAlgebra<F>,
) -> Result<AlmostAbelianKind<F>, AlgebraError> {
    let n = l.dim();
    if n < 2 {
        return Ok(AlmostAbelianKind::None);
    }
    let minus = -F::one();
    for d in crate::linalg::enumerate_subspaces::<F>(n, n - 1)? {
        if !is_abelian_subspace(l, &d) {
            continue;
        }
        for x in all_vectors::<F>(n)? {
            if d.contains(&x) || !l.in_j(&x) {
                continue;
            }
            let right = d.basis().iter().all(|v| &l.bracket(v, &x) == v);
            if !right {
                continue;
            }
            if d.basis().iter().all(|v| l.bracket(&x, v) == crate::linalg::scale(&minus, v)) {
                return Ok(AlmostAbelianKind::LieType { x, d });
            }
            if d.basis().iter().all(|v| is_zero_vector(&l.bracket(&x, v))) {
                return Ok(AlmostAbelianKind::NonLieType { x, d });
            }
        }
    }
    Ok(AlmostAbelianKind::None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TurnerForm<F: Field> {
    /// `L^3 = 0`.
    CaseI,
    /// `L = A ⊕ B`, `A` an abelian ideal, `B` an almost abelian ideal.
    CaseII { a: Subspace<F>, b: Subspace<F>, lie_type: bool },
    Neither,
}

impl<F: Field> TurnerForm<F> {
    pub fn name(&self) -> &'static str {
        match self {
            TurnerForm::CaseI => "case-i",
            TurnerForm::CaseII { .. } => "case-ii",
            TurnerForm::Neither => "neither",
        }
    }

    pub fn is_neither(&self) -> bool {
        matches!(self, TurnerForm::Neither)
    }
}

/// Case II forces `A = Z(L)` (almost abelian algebras are centerless) and
/// `B ⊇ L^2` with `B = L^2 ∔ Fy`; all choices of `y` modulo `Z(L) + L^2`
/// give the same table, so one complement decides the case over any field.
pub fn turner_form<F: Field>(l: &LeibnizAlgebra<F>) -> TurnerForm<F> {
    if l.power(3).is_zero() {
        return TurnerForm::CaseI;
    }
    match case_two(l) {
        Some((a, b, lie_type)) => TurnerForm::CaseII { a, b, lie_type },
        None => TurnerForm::Neither,
    }
}

fn case_two<F: Field>(l: &LeibnizAlgebra<F>) -> Option<(Subspace<F>, Subspace<F>, bool)> {
    let n = l.dim();
    let z = l.center();
    let d = l.derived();
    if d.is_zero() || !z.intersect(&d).is_zero() || z.dim() + d.dim() + 1 != n {
        return None;
    }
    let y = z.sum(&d).standard_complement().remove(0);
    let b = d.sum(&Subspace::line(y));
    let (sub, _) = l.restrict(&b).ok()?;
    let kind = almost_abelian_kind(&sub);
    (!kind.is_none()).then(|| (z, b, kind.is_lie_type()))
}

/// Case II by enumerating pairs of complementary ideals.
pub fn turner_form_exhaustive<F: Field>(l: &LeibnizAlgebra<F>) -> Result<TurnerForm<F>, AlgebraError> {
    if l.power(3).is_zero() {
        return Ok(TurnerForm::CaseI);
    }
    let ideals = ideals::all_ideals(l)?.ideals;
    for a in ideals.iter().filter(|a| is_abelian_subspace(l, a)) {
        for b in &ideals {
            if !a.intersect(b).is_zero() || !a.sum(b).is_full() {
                continue;
            }
            if !l.bracket_spaces(a, b).is_zero() || !l.bracket_spaces(b, a).is_zero() {
                continue;
            }
            let (sub, _) = l.restrict(b)?;
            let kind = almost_abelian_kind_exhaustive(&sub)?;
            if !kind.is_none() {
                return Ok(TurnerForm::CaseII { a: a.clone(), b: b.clone(), lie_type: kind.is_lie_type() });
            }
        }
    }
    Ok(TurnerForm::Neither)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PreconditionError {
    #[error("algebra is not symmetric")]
    NotSymmetric,
    #[error("not every line subalgebra is a c-ideal")]
    HypothesisFails,
    #[error("hypothesis undecided")]
    Undecided,
}

/// The shape of a symmetric algebra whose line subalgebras are all
/// c-ideals; `Neither` here falsifies the classification.
pub fn symmetric_classification_check<F: Field>(
    l: &LeibnizAlgebra<F>,
) -> Result<TurnerForm<F>, PreconditionError> {
    if !l.is_symmetric() {
        return Err(PreconditionError::NotSymmetric);
    }
    match cideal::all_one_dim_c_ideals(l).verdict().decided() {
        Some(true) => Ok(turner_form(l)),
        Some(false) => Err(PreconditionError::HypothesisFails),
        None => Err(PreconditionError::Undecided),
    }
}

/// Structure forced on algebras all of whose line subalgebras are c-ideals,
/// with every checked condition recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimCProfile<F: Field> {
    pub asoc: Subspace<F>,
    pub center: Subspace<F>,
    /// Non-central part of `Asoc(L)`: common eigenvectors for the right
    /// action with functional `lambda`.
    pub d: Subspace<F>,
    /// `[a, y] = lambda(y) a` for `a` in `d`; `None` when `d = 0`.
    pub lambda: Option<Vec<F>>,
    pub violations: Vec<String>,
}

/// Checks: minimal abelian ideals are lines; non-central ones share one
/// nonzero right eigenvalue functional `Λ`; `Asoc(L) = Z(L) ⊕ D`; and when
/// `D ≠ 0`, `ker Λ` is an ideal containing `Z(L) ⊕ D` with
/// `[D, ker Λ] = [ker Λ, D] = 0` and `[a, x] = a` for `Λ(x) = 1`.
pub fn one_dim_c_profile<F: Field>(l: &LeibnizAlgebra<F>) -> Result<OneDimCProfile<F>, AlgebraError> {
    let n = l.dim();
    let mut violations = Vec::new();
    let minimal = ideals::minimal_ideals(l)?.ideals;
    let abelian: Vec<_> = minimal.into_iter().filter(|m| is_abelian_subspace(l, m)).collect();
    for m in &abelian {
        if m.dim() != 1 {
            violations.push(format!("minimal abelian ideal {} is not a line", l.render_subspace(m)));
        }
    }
    let center = l.center();
    let asoc = abelian.iter().fold(l.zero_space(), |acc, m| acc.sum(m));
    let mut lambda: Option<Vec<F>> = None;
    for m in abelian.iter().filter(|m| m.dim() == 1 && !m.leq(&center)) {
        let a = &m.basis()[0];
        let p = a.iter().position(|c| !c.is_zero()).expect("nonzero");
        let f: Vec<F> = (0..n).map(|j| l.bracket(a, &l.basis_vector(j))[p].clone() / a[p].clone()).collect();
        if f.iter().all(|c| c.is_zero()) {
            violations.push(format!("non-central {} has zero right functional", l.render_vector(a)));
            continue;
        }
        match &lambda {
            None => lambda = Some(f),
            Some(g) if *g != f => {
                violations.push(format!("{} has a different right functional", l.render_vector(a)));
            }
            _ => {}
        }
    }
    let d = match &lambda {
        None => l.zero_space(),
        Some(f) => {
            // D = {a in Asoc : [a, e_j] = f_j a}
            let mut space = asoc.clone();
            for (j, c) in f.iter().enumerate() {
                let op = l.right_mult(&l.basis_vector(j)).shift(c);
                space = space.intersect(&op.kernel());
            }
            space
        }
    };
    if !center.intersect(&d).is_zero() || center.sum(&d) != asoc {
        violations.push("Asoc(L) != Z(L) ⊕ D".into());
    }
    if let Some(f) = &lambda {
        let functional = LinearMap::from_images(1, f.iter().map(|c| vec![c.clone()]).collect());
        let k = functional.kernel();
        if !l.is_ideal(&k) {
            violations.push("ker Λ is not an ideal".into());
        }
        if !center.sum(&d).leq(&k) {
            violations.push("Z(L) ⊕ D is not inside ker Λ".into());
        }
        if !l.two_sided(&d, &k).is_zero() {
            violations.push("[D, ker Λ] + [ker Λ, D] != 0".into());
        }
        let j = f.iter().position(|c| !c.is_zero()).expect("nonzero functional");
        let x = crate::linalg::scale(&f[j].inv().expect("nonzero"), &l.basis_vector(j));
        if d.basis().iter().any(|a| &l.bracket(a, &x) != a) {
            violations.push("[a, x] != a for Λ(x) = 1".into());
        }
    }
    Ok(OneDimCProfile { asoc, center, d, lambda, violations })
}

/// Summary flags for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub field: String,
    pub dim: usize,
    pub lie: bool,
    pub right: bool,
    pub left: bool,
    pub symmetric: Option<bool>,
    pub nilpotency_class: Option<usize>,
    pub derived_length: Option<usize>,
    pub solvable: bool,
    pub supersolvable: Option<bool>,
    pub simple: Option<bool>,
    pub cyclic_generator: Option<Vec<String>>,
    pub cyclic: Option<bool>,
    pub almost_abelian: String,
    pub turner_form: String,
}

impl StructureProfile {
    pub fn of<F: Field>(l: &LeibnizAlgebra<F>) -> Self {
        let cyclic = is_cyclic(l);
        StructureProfile {
            field: F::spec().to_string(),
            dim: l.dim(),
            lie: l.is_lie(),
            right: l.check_right_leibniz(),
            left: l.check_left_leibniz(),
            symmetric: l.check_symmetric().decided(),
            nilpotency_class: l.nilpotency_class(),
            derived_length: l.derived_length(),
            solvable: l.is_solvable(),
            supersolvable: is_supersolvable(l).decided(),
            simple: is_simple(l).decided(),
            cyclic: cyclic.decided(),
            cyclic_generator: cyclic.witness.map(|v| v.iter().map(|c| c.to_string()).collect()),
            almost_abelian: almost_abelian_kind(l).name().into(),
            turner_form: turner_form(l).name().into(),
        }
    }

    /// Implications every profile must satisfy.
    pub fn consistent(&self) -> bool {
        let nil = self.nilpotency_class.is_some();
        (!nil || self.solvable)
            && (self.supersolvable != Some(true) || self.solvable)
            && (self.derived_length.is_some() == self.solvable)
            && (!self.lie || self.left)
    }
}
