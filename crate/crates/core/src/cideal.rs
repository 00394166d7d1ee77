//! c-ideal and weak c-ideal decisions.
//!
//! Over finite fields both predicates are decided exactly after passing to
//! `L/B_L`: there `B` must meet its complement trivially, which fixes the
//! complement's dimension. Over the rationals only certificates and
//! structural arguments are used, so `False` appears only when a structural
//! argument proves it.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, LeibnizAlgebra};
use crate::field::Field;
use crate::ideals::{self, core, subideal_chain_unchecked, SubidealChain};
use crate::linalg::{enumerate_subspaces, is_zero_vector, QuotientMap, Subspace, Vector};
use crate::verdict::{Method, Verdict};

/// Witness that `b` is a weak c-ideal: `b + complement = L` and
/// `b ∩ complement ⊆ core`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakCCertificate<F: Field> {
    pub b: Subspace<F>,
    pub complement: Subspace<F>,
    pub chain: SubidealChain<F>,
    pub core: Subspace<F>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
pub enum CertificateError {
    #[error("B is not a subalgebra")]
    NotSubalgebra,
    #[error("B + C != L")]
    DoesNotSpan,
    #[error("recorded core is not the core of B")]
    WrongCore,
    #[error("B ∩ C is not contained in the core of B")]
    IntersectionTooLarge,
    #[error("chain does not start at C")]
    ChainMismatch,
    #[error("invalid subideal chain: {0}")]
    InvalidChain(String),
}

pub fn verify_weak_c<F: Field>(
    l: &LeibnizAlgebra<F>,
    cert: &WeakCCertificate<F>,
) -> Result<(), CertificateError> {
    if !l.is_subalgebra(&cert.b) {
        return Err(CertificateError::NotSubalgebra);
    }
    if !cert.b.sum(&cert.complement).is_full() {
        return Err(CertificateError::DoesNotSpan);
    }
    if core(l, &cert.b) != cert.core {
        return Err(CertificateError::WrongCore);
    }
    if !cert.b.intersect(&cert.complement).leq(&cert.core) {
        return Err(CertificateError::IntersectionTooLarge);
    }
    if cert.chain.links.first() != Some(&cert.complement) {
        return Err(CertificateError::ChainMismatch);
    }
    cert.chain
        .validate(l)
        .map_err(|e| CertificateError::InvalidChain(e.to_string()))
}

/// Builds a certificate for a claimed complement; `None` if the claim fails.
pub fn certify<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
    complement: &Subspace<F>,
) -> Option<WeakCCertificate<F>> {
    if !l.is_subalgebra(b) || !l.is_subalgebra(complement) {
        return None;
    }
    let chain = subideal_chain_unchecked(l, complement)?;
    let cert = WeakCCertificate {
        b: b.clone(),
        complement: complement.clone(),
        chain,
        core: core(l, b),
    };
    verify_weak_c(l, &cert).is_ok().then_some(cert)
}

/// `B`, its core and the projection of `B` into `L/B_L`.
struct Reduction<F: Field> {
    quotient: LeibnizAlgebra<F>,
    map: QuotientMap<F>,
    image: Subspace<F>,
}

fn reduce<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> Reduction<F> {
    let c = core(l, b);
    let (quotient, map) = l.quotient(&c).expect("the core is an ideal");
    let image = map.project_subspace(b);
    Reduction { quotient, map, image }
}

fn require_subalgebra<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> Result<(), AlgebraError> {
    if b.ambient() != l.dim() {
        return Err(AlgebraError::Dimension { dim: l.dim(), found: b.ambient() });
    }
    if !l.is_subalgebra(b) {
        return Err(AlgebraError::NotSubalgebra);
    }
    Ok(())
}

/// Complement of `B + L^2` spanned by unit vectors, added to `L^2`: an ideal
/// meeting `B` in `B ∩ L^2`.
fn derived_complement<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> Subspace<F> {
    let d = l.derived();
    let t = b.sum(&d).standard_complement();
    Subspace::span_unchecked(l.dim(), d.basis().iter().cloned().chain(t))
}

/// c-ideal decision. The witness is an ideal `K` with `L = B + K` and
/// `B ∩ K ⊆ B_L`.
pub fn is_c_ideal<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Result<Verdict<Subspace<F>>, AlgebraError> {
    require_subalgebra(l, b)?;
    if l.is_ideal(b) {
        return Ok(Verdict::yes(Method::Structural, l.full()).with_note("B is an ideal"));
    }
    if F::is_finite() {
        let r = reduce(l, b);
        let n = r.quotient.dim();
        let k = n - r.image.dim();
        for cand in enumerate_subspaces::<F>(n, k)? {
            if r.image.intersect(&cand).is_zero() && r.quotient.is_ideal(&cand) {
                return Ok(Verdict::yes(Method::QuotientReduction, r.map.preimage(&cand)));
            }
        }
        return Ok(Verdict::no(Method::QuotientReduction, "no ideal complement in L/B_L"));
    }
    let core_b = core(l, b);
    let k = derived_complement(l, b);
    if b.intersect(&k).leq(&core_b) {
        return Ok(Verdict::yes(Method::Certificate, k).with_note("complement containing L^2"));
    }
    if b.dim() == 1 {
        // a hyperplane ideal contains L^2, since one-dimensional algebras are abelian
        return Ok(Verdict::no(Method::Structural, "line inside L^2 that is not an ideal"));
    }
    Ok(Verdict::unknown("no certificate found"))
}

/// The cascade: ideal test, simple-Lie shortcut, exhaustive search in
/// `L/B_L` (finite fields), certificates otherwise.
pub fn is_weak_c_ideal<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Result<Verdict<WeakCCertificate<F>>, AlgebraError> {
    require_subalgebra(l, b)?;
    if l.is_ideal(b) {
        let cert = certify(l, b, &l.full()).expect("C = L certifies an ideal");
        return Ok(Verdict::yes(Method::Structural, cert).with_note("B is an ideal"));
    }
    if l.is_lie() && crate::structure::is_simple(l).is_true() {
        // B is not an ideal here, so B ∉ {0, L}
        return Ok(Verdict::no(Method::SimpleShortcut, "simple Lie algebra"));
    }
    if F::is_finite() {
        return weak_c_exhaustive(l, b);
    }
    weak_c_certificates(l, b)
}

/// Exhaustive search over subalgebra complements of `B/B_L` in `L/B_L`,
/// in lexicographic order.
pub fn weak_c_exhaustive<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Result<Verdict<WeakCCertificate<F>>, AlgebraError> {
    require_subalgebra(l, b)?;
    let r = reduce(l, b);
    let n = r.quotient.dim();
    let k = n - r.image.dim();
    for cand in enumerate_subspaces::<F>(n, k)? {
        if !r.image.intersect(&cand).is_zero() || !r.quotient.is_subalgebra(&cand) {
            continue;
        }
        if subideal_chain_unchecked(&r.quotient, &cand).is_some() {
            let c = r.map.preimage(&cand);
            let cert = certify(l, b, &c).expect("preimage of a subideal complement");
            return Ok(Verdict::yes(Method::QuotientReduction, cert));
        }
    }
    Ok(Verdict::no(Method::QuotientReduction, "no subideal complement in L/B_L"))
}

fn weak_c_certificates<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Result<Verdict<WeakCCertificate<F>>, AlgebraError> {
    let mut candidates = vec![derived_complement(l, b)];
    candidates.extend(l.derived_series());
    candidates.extend(l.lower_central_series());
    candidates.push(l.kernel());
    for c in candidates {
        if let Some(cert) = certify(l, b, &c) {
            return Ok(Verdict::yes(Method::Certificate, cert));
        }
    }
    if b.dim() == 1 {
        // a codimension-one subideal is an ideal, so lines reduce to the c-ideal case
        let v = is_c_ideal(l, b)?;
        if v.is_false() {
            return Ok(Verdict::no(Method::Structural, v.note));
        }
    }
    Ok(Verdict::unknown("no certificate among the candidate subideals"))
}

/// The definition searched directly: the first subalgebra `C` of `L`, in
/// lexicographic order, that is a subideal with `L = B + C` and
/// `B ∩ C ⊆ B_L`. No reduction modulo the core.
pub fn weak_c_unreduced<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Result<Option<Subspace<F>>, AlgebraError> {
    require_subalgebra(l, b)?;
    let core_b = core(l, b);
    for c in crate::linalg::all_subspaces::<F>(l.dim())? {
        if b.sum(&c).is_full()
            && b.intersect(&c).leq(&core_b)
            && l.is_subalgebra(&c)
            && subideal_chain_unchecked(l, &c).is_some()
        {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Some subideal `C` with `L = B ∔ C`, first in lexicographic order.
pub fn subideal_complement<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Result<Option<Subspace<F>>, AlgebraError> {
    if !F::is_finite() {
        return Err(AlgebraError::InfiniteField("subideal complement search"));
    }
    let n = l.dim();
    for cand in enumerate_subspaces::<F>(n, n - b.dim())? {
        if b.intersect(&cand).is_zero()
            && l.is_subalgebra(&cand)
            && subideal_chain_unchecked(l, &cand).is_some()
        {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Whether `B/B_L` has a subideal complement in `L/B_L`, computed in the
/// quotient algebra itself.
pub fn has_subideal_complement_mod_core<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
) -> Result<bool, AlgebraError> {
    require_subalgebra(l, b)?;
    let r = reduce(l, b);
    Ok(subideal_complement(&r.quotient, &r.image)?.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineClass<F: Field> {
    IdealCase,
    /// An ideal `B` with `L = B ∔ Fx`.
    ComplementedCase(Subspace<F>),
    NotCIdeal,
}

/// Trichotomy for a line `Fx` that is a subalgebra: an ideal, complemented
/// by an ideal (exactly when `x ∉ L^2`), or not a c-ideal.
pub fn classify_one_dim<F: Field>(
    l: &LeibnizAlgebra<F>,
    x: &[F],
) -> Result<LineClass<F>, AlgebraError> {
    if x.len() != l.dim() {
        return Err(AlgebraError::Dimension { dim: l.dim(), found: x.len() });
    }
    if is_zero_vector(x) {
        return Err(AlgebraError::NotSubalgebra);
    }
    let line = Subspace::line(x.to_vec());
    if !line.contains(&l.square(x)) {
        return Err(AlgebraError::NotSubalgebra);
    }
    if l.is_ideal(&line) {
        return Ok(LineClass::IdealCase);
    }
    if l.derived().contains(x) {
        return Ok(LineClass::NotCIdeal);
    }
    Ok(LineClass::ComplementedCase(derived_complement(l, &line)))
}

/// Outcome of both decision routes for "every line subalgebra is a c-ideal".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimReport<F> {
    /// Route (a): exhaustive c-ideal decision on every line subalgebra.
    pub by_lines: Option<bool>,
    /// Route (b): `L^2 ∩ J ⊆ Asoc(L)`. Necessary, not sufficient: an
    /// element of Asoc need not span an ideal.
    pub by_criterion: Option<bool>,
    /// Route (c): every element of `L^2 ∩ J` spans an ideal. Exact.
    pub by_exact: Option<bool>,
    /// A line subalgebra that is not a c-ideal.
    pub failing_line: Option<Vector<F>>,
    /// An element of `L^2 ∩ J` outside `Asoc(L)`.
    pub cone_witness: Option<Vector<F>>,
    /// An element of `L^2 ∩ J` whose span is not an ideal.
    pub exact_witness: Option<Vector<F>>,
}

impl<F: Field> OneDimReport<F> {
    /// The line loop and the stated criterion agree where both decided.
    pub fn agree(&self) -> bool {
        match (self.by_lines, self.by_criterion) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// The line loop and the exact criterion agree where both decided.
    pub fn exact_agrees(&self) -> bool {
        match (self.by_lines, self.by_exact) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// Decided by the sound routes; a failed stated criterion also refutes.
    pub fn verdict(&self) -> Verdict<()> {
        match (self.by_lines, self.by_exact) {
            (Some(a), Some(b)) if a == b => Verdict::from_bool(a, Method::Exhaustive, "line loop and exact criterion agree"),
            (Some(_), Some(_)) => Verdict::unknown("routes disagree"),
            (None, Some(b)) => Verdict::from_bool(b, Method::Structural, "exact criterion"),
            (Some(a), None) => Verdict::from_bool(a, Method::Exhaustive, "line loop only"),
            (None, None) if self.by_criterion == Some(false) => {
                Verdict::from_bool(false, Method::Structural, "L^2 ∩ J not inside Asoc")
            }
            (None, None) => Verdict::unknown("no route applies"),
        }
    }
}

/// Both routes over finite fields; over the rationals the criterion alone,
/// when `L^2 ∩ J` is a subspace that can be computed exactly.
pub fn all_one_dim_c_ideals<F: Field>(l: &LeibnizAlgebra<F>) -> OneDimReport<F> {
    let mut report = OneDimReport {
        by_lines: None,
        by_criterion: None,
        by_exact: None,
        failing_line: None,
        cone_witness: None,
        exact_witness: None,
    };
    let d = l.derived();
    if F::is_finite() {
        let mut ok = true;
        for line in enumerate_subspaces::<F>(l.dim(), 1).expect("finite") {
            if !l.is_subalgebra(&line) {
                continue;
            }
            if is_c_ideal(l, &line).expect("subalgebra").is_false() {
                ok = false;
                report.failing_line = Some(line.basis()[0].clone());
                break;
            }
        }
        report.by_lines = Some(ok);
        let asoc = ideals::asoc(l).witness.expect("exhaustive");
        let vectors = crate::linalg::subspace_elements(&d).expect("finite");
        let cone: Vec<Vector<F>> = vectors.into_iter().filter(|v| l.in_j(v)).collect();
        let witness = cone.iter().find(|v| !asoc.contains(v)).cloned();
        report.by_criterion = Some(witness.is_none());
        report.cone_witness = witness;
        let bad = cone.iter().find(|v| !is_zero_vector(v) && !l.is_ideal(&Subspace::line((*v).clone()))).cloned();
        report.by_exact = Some(bad.is_none());
        report.exact_witness = bad;
        return report;
    }
    let Some(cone) = derived_cone(l) else { return report };
    if let Some(a) = ideals::asoc(l).witness.as_ref() {
        let outside = cone.basis().iter().find(|v| !a.contains(v)).cloned();
        report.by_criterion = Some(outside.is_none());
        report.cone_witness = outside;
    }
    let bad = non_ideal_element(l, &cone);
    report.by_exact = Some(bad.is_none());
    report.exact_witness = bad;
    report
}

/// An element of `p` whose span is not an ideal, if any. Every element
/// spans an ideal iff each `L_y`, `R_y` maps `p` into itself as a scalar.
pub fn non_ideal_element<F: Field>(l: &LeibnizAlgebra<F>, p: &Subspace<F>) -> Option<Vector<F>> {
    let basis = p.basis();
    for i in 0..l.dim() {
        let y = l.basis_vector(i);
        for t in [l.left_mult(&y), l.right_mult(&y)] {
            let mut scalar: Option<(usize, F)> = None;
            for (j, v) in basis.iter().enumerate() {
                let w = t.apply(v);
                let Some(c) = proportion(&w, v) else { return Some(v.clone()) };
                match &scalar {
                    None => scalar = Some((j, c)),
                    Some((k, c0)) if *c0 != c => return Some(crate::linalg::add(&basis[*k], v)),
                    Some(_) => {}
                }
            }
        }
    }
    None
}

/// `c` with `w = c·v`, for nonzero `v`.
fn proportion<F: Field>(w: &[F], v: &[F]) -> Option<F> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let c = w[k].clone() / v[k].clone();
    w.iter().zip(v).all(|(a, b)| *a == c.clone() * b.clone()).then_some(c)
}

/// `L^2 ∩ J` when it is a subspace: the radical of the square map on `L^2`
/// whenever that radical has codimension at most one in `L^2`.
pub fn derived_cone<F: Field>(l: &LeibnizAlgebra<F>) -> Option<Subspace<F>> {
    if F::characteristic() == 2 {
        return None;
    }
    let d = l.derived();
    // polar radical: v with [v,w] + [w,v] = 0 for all w in L^2; the square map
    // is additive there, so it vanishes on it iff it vanishes on a basis
    let rad = l.polar_radical(&d, &d);
    if rad.basis().iter().any(|v| !l.in_j(v)) {
        return None;
    }
    (d.dim() - rad.dim() <= 1).then_some(rad)
}
