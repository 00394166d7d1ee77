//! Named algebras, builders and corpus generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{default_labels, AlgebraError, LeibnizAlgebra, StructureTable};
use crate::field::{Field, FieldSpec};
use crate::ideals::{self, LeviData};
use crate::linalg::{zero_vector, LinearMap, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{name} needs characteristic different from {p}")]
    Characteristic { name: &'static str, p: u32 },
    #[error("no catalog entry named {0}")]
    Unknown(String),
    #[error("corpus of dimension {dim} over {field} exceeds the enumeration budget")]
    Budget { dim: usize, field: FieldSpec },
    #[error("annotation of {name} fails verification: {reason}")]
    Annotation { name: String, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn f<F: Field>(v: i64) -> F {
    F::from_i64(v)
}

/// Basis `a, b, x` with `a^2 = b`, `[a,x] = -[x,a] = a/2`, `[b,x] = b`.
/// Every line is a c-ideal, yet the algebra has neither `L^3 = 0` nor a
/// splitting into an abelian and an almost abelian ideal.
pub fn example<F: Field>() -> Result<LeibnizAlgebra<F>, CatalogError> {
    if F::characteristic() == 2 {
        return Err(CatalogError::Characteristic { name: "turner-counterexample", p: 2 });
    }
    let half = f::<F>(2).inv().expect("odd characteristic");
    Ok(LeibnizAlgebra::from_entries(
        &["a", "b", "x"],
        [(0, 0, 1, F::one()), (0, 2, 0, half.clone()), (2, 0, 0, -half), (1, 2, 1, F::one())],
    )?)
}

/// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2<F: Field>() -> LeibnizAlgebra<F> {
    LeibnizAlgebra::from_entries(&["e", "f", "h"], lie_entries(&sl2_products())).expect("Lie")
}

fn sl2_products() -> Vec<(usize, usize, usize, i64)> {
    vec![(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)]
}

/// Antisymmetric completion of `[e_i, e_j] = c e_k` with `i != j`.
fn lie_entries<F: Field>(products: &[(usize, usize, usize, i64)]) -> Vec<(usize, usize, usize, F)> {
    products
        .iter()
        .flat_map(|&(i, j, k, c)| [(i, j, k, f::<F>(c)), (j, i, k, f::<F>(-c))])
        .collect()
}

/// `[x,y] = -[y,x] = z`.
pub fn heisenberg<F: Field>() -> LeibnizAlgebra<F> {
    LeibnizAlgebra::from_entries(&["x", "y", "z"], lie_entries(&[(0, 1, 2, 1)])).expect("Lie")
}

/// Cyclic algebra on `x, x^2, ..., x^n` with `[x^i, x] = x^{i+1}` and
/// `[x^n, x] = sum tail[i] x^{i+2}`; all products with `x^j`, `j >= 2`, on the
/// right vanish.
pub fn cyclic<F: Field>(n: usize, tail: &[F]) -> Result<LeibnizAlgebra<F>, CatalogError> {
    assert!(n >= 1 && tail.len() + 1 == n.max(1));
    let names: Vec<String> =
        (1..=n).map(|i| if i == 1 { "x".to_string() } else { format!("x{i}") }).collect();
    let mut t = StructureTable::zero(n).with_labels(names)?;
    for i in 0..n - 1 {
        t.set(i, 0, i + 1, F::one());
    }
    for (i, c) in tail.iter().enumerate() {
        t.set(n - 1, 0, i + 1, c.clone());
    }
    Ok(LeibnizAlgebra::new(t)?)
}

pub fn cyclic_nilpotent<F: Field>(n: usize) -> LeibnizAlgebra<F> {
    cyclic(n, &vec![F::zero(); n - 1]).expect("nilpotent cyclic")
}

/// `x^{n+1} = x^n`.
pub fn cyclic_idempotent<F: Field>(n: usize) -> LeibnizAlgebra<F> {
    assert!(n >= 2);
    let mut tail = vec![F::zero(); n - 1];
    tail[n - 2] = F::one();
    cyclic(n, &tail).expect("cyclic with x^{n+1} = x^n")
}

/// `Fx ∔ D` with `[d,x] = -[x,d] = d`.
pub fn almost_abelian_lie<F: Field>(n: usize) -> LeibnizAlgebra<F> {
    almost_abelian(n, true)
}

/// `Fx ∔ D` with `[d,x] = d`, all other products zero.
pub fn almost_abelian_nonlie<F: Field>(n: usize) -> LeibnizAlgebra<F> {
    almost_abelian(n, false)
}

fn almost_abelian<F: Field>(n: usize, lie: bool) -> LeibnizAlgebra<F> {
    assert!(n >= 2);
    let x = n - 1;
    let mut names: Vec<String> = (1..n).map(|i| format!("d{i}")).collect();
    names.push("x".into());
    let mut entries = Vec::new();
    for d in 0..x {
        entries.push((d, x, d, F::one()));
        if lie {
            entries.push((x, d, d, -F::one()));
        }
    }
    LeibnizAlgebra::new(StructureTable::from_entries(names, entries)).expect("almost abelian")
}

/// Lie algebra `sl2 ⋉ V` for the natural module `V = span{v1, v2}`.
pub fn sl2_natural<F: Field>() -> LeibnizAlgebra<F> {
    let mut products = sl2_products();
    // e v2 = v1, f v1 = v2, h v1 = v1, h v2 = -v2
    products.extend([(0, 4, 3, 1), (1, 3, 4, 1), (2, 3, 3, 1), (2, 4, 4, -1)]);
    LeibnizAlgebra::from_entries(&["e", "f", "h", "v1", "v2"], lie_entries(&products))
        .expect("Lie")
}

/// Non-Lie `sl2 ⊕ V` with `[v, s] = -s.v`, `[s, v] = 0`; here `V` is the
/// Leibniz kernel.
pub fn sl2_natural_leibniz<F: Field>() -> LeibnizAlgebra<F> {
    let mut entries = lie_entries::<F>(&sl2_products());
    for &(s, v, w, c) in &[(0, 4, 3, 1), (1, 3, 4, 1), (2, 3, 3, 1), (2, 4, 4, -1)] {
        entries.push((v, s, w, f::<F>(-c)));
    }
    LeibnizAlgebra::from_entries(&["e", "f", "h", "v1", "v2"], entries).expect("right module")
}

pub fn direct_sum<F: Field>(a: &LeibnizAlgebra<F>, b: &LeibnizAlgebra<F>) -> LeibnizAlgebra<F> {
    let n = a.dim();
    let mut names: Vec<String> = a.labels().to_vec();
    for l in b.labels() {
        let mut name = l.clone();
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    let mut entries = Vec::new();
    for (i, j, k, c) in a.table().entries() {
        entries.push((i, j, k, c.clone()));
    }
    for (i, j, k, c) in b.table().entries() {
        entries.push((i + n, j + n, k + n, c.clone()));
    }
    LeibnizAlgebra::trusted(StructureTable::from_entries(names, entries))
}

/// Adjoins `x` to `L` with `[v, x] = right(v)`, `[x, v] = left(v)` and
/// `[x, x] = square`; rejects the result unless it is right Leibniz.
pub fn one_dim_extension<F: Field>(
    l: &LeibnizAlgebra<F>,
    right: &LinearMap<F>,
    left: &LinearMap<F>,
    square: &[F],
) -> Result<LeibnizAlgebra<F>, AlgebraError> {
    let n = l.dim();
    let mut names = l.labels().to_vec();
    let mut x = "x".to_string();
    while names.contains(&x) {
        x.push('\'');
    }
    names.push(x);
    let mut t = StructureTable::zero(n + 1).with_labels(names)?;
    let pad = |v: &[F]| {
        let mut w = v.to_vec();
        w.push(F::zero());
        w
    };
    for i in 0..n {
        for j in 0..n {
            t.set_product(i, j, &pad(l.table().product(i, j)));
        }
        t.set_product(i, n, &pad(right.image_of_unit(i)));
        t.set_product(n, i, &pad(left.image_of_unit(i)));
    }
    t.set_product(n, n, &pad(square));
    LeibnizAlgebra::new(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Fact {
    Lie(bool),
    Nilpotent(bool),
    Solvable(bool),
    Symmetric(bool),
    Simple(bool),
    Supersolvable(bool),
    Cyclic(bool),
    NilpotencyClass(usize),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry<F: Field> {
    pub name: String,
    pub algebra: LeibnizAlgebra<F>,
    pub levi: Option<LeviData<F>>,
    pub cartan: Vec<Subspace<F>>,
    pub facts: Vec<Fact>,
}

impl<F: Field> CatalogEntry<F> {
    fn new(name: impl Into<String>, algebra: LeibnizAlgebra<F>) -> Self {
        CatalogEntry { name: name.into(), algebra, levi: None, cartan: Vec::new(), facts: Vec::new() }
    }

    fn facts(mut self, facts: impl IntoIterator<Item = Fact>) -> Self {
        self.facts.extend(facts);
        self
    }

    fn cartan(mut self, spaces: impl IntoIterator<Item = Subspace<F>>) -> Self {
        self.cartan.extend(spaces);
        self
    }

    fn levi(mut self, levi: Subspace<F>, radical: Subspace<F>) -> Self {
        self.levi = Some(LeviData { levi, radical });
        self
    }

    /// Re-checks every annotation that has a verifier.
    pub fn verify(&self) -> Result<(), CatalogError> {
        let l = &self.algebra;
        let fail = |reason: String| CatalogError::Annotation { name: self.name.clone(), reason };
        if !l.check_right_leibniz() {
            return Err(fail("right identity".into()));
        }
        if let Some(levi) = &self.levi {
            ideals::check_levi(l, levi).map_err(fail)?;
        }
        for c in &self.cartan {
            if !ideals::is_cartan(l, c) {
                return Err(fail(format!("{} is not Cartan", l.render_subspace(c))));
            }
        }
        for fact in &self.facts {
            let ok = match *fact {
                Fact::Lie(b) => l.is_lie() == b,
                Fact::Nilpotent(b) => l.is_nilpotent() == b,
                Fact::Solvable(b) => l.is_solvable() == b,
                Fact::Symmetric(b) => l.check_symmetric().decided() == Some(b),
                Fact::Simple(b) => crate::structure::is_simple(l).decided().is_none_or(|v| v == b),
                Fact::Supersolvable(b) => {
                    crate::structure::is_supersolvable(l).decided().is_none_or(|v| v == b)
                }
                Fact::Cyclic(b) => crate::structure::is_cyclic(l).decided().is_none_or(|v| v == b),
                Fact::NilpotencyClass(c) => l.nilpotency_class() == Some(c),
            };
            if !ok {
                return Err(fail(format!("{fact:?}")));
            }
        }
        Ok(())
    }
}

/// Every named algebra constructible over `F`.
pub fn catalog<F: Field>() -> Vec<CatalogEntry<F>> {
    use Fact::*;
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(
            CatalogEntry::new(format!("abelian-{n}"), LeibnizAlgebra::abelian(n))
                .facts([Lie(true), NilpotencyClass(1), Supersolvable(true)]),
        );
    }
    for n in 2..=5 {
        let c = cyclic_nilpotent::<F>(n);
        let full = c.full();
        out.push(
            CatalogEntry::new(format!("cyclic-nilpotent-{n}"), c)
                .facts([Nilpotent(true), Cyclic(true), Lie(false), NilpotencyClass(n)])
                .cartan([full]),
        );
        out.push(
            CatalogEntry::new(format!("cyclic-idempotent-{n}"), cyclic_idempotent::<F>(n))
                .facts([Nilpotent(false), Solvable(true), Cyclic(true), Lie(false)]),
        );
    }
    if let Ok(e) = example::<F>() {
        let x = e.span_labels(&["x"]);
        out.push(
            CatalogEntry::new("turner-counterexample", e)
                .facts([Lie(false), Symmetric(false), Solvable(true), Supersolvable(true)])
                .cartan([x]),
        );
    }
    for n in 2..=4 {
        out.push(
            CatalogEntry::new(format!("almost-abelian-lie-{n}"), almost_abelian_lie::<F>(n))
                .facts([Lie(true), Solvable(true), Nilpotent(false)]),
        );
        out.push(
            CatalogEntry::new(format!("almost-abelian-nonlie-{n}"), almost_abelian_nonlie::<F>(n))
                .facts([Lie(false), Solvable(true), Nilpotent(false)]),
        );
    }
    let h = heisenberg::<F>();
    let hf = h.full();
    out.push(
        CatalogEntry::new("heisenberg", h)
            .facts([Lie(true), NilpotencyClass(2)])
            .cartan([hf]),
    );
    out.push(
        CatalogEntry::new(
            "abelian-1+almost-abelian-lie-3",
            direct_sum(&LeibnizAlgebra::abelian(1), &almost_abelian_lie::<F>(3)),
        )
        .facts([Lie(true), Solvable(true)]),
    );
    if F::characteristic() != 2 {
        let s = sl2::<F>();
        let hs = s.span_labels(&["h"]);
        let full = s.full();
        let zero = s.zero_space();
        out.push(
            CatalogEntry::new("sl2", s)
                .facts([Lie(true), Solvable(false), Simple(true)])
                .cartan([hs])
                .levi(full, zero),
        );
        let sa = direct_sum(&sl2::<F>(), &LeibnizAlgebra::abelian(1));
        let cartan = sa.span_labels(&["h", "e0"]);
        let (levi, rad) = (sa.span_labels(&["e", "f", "h"]), sa.span_labels(&["e0"]));
        out.push(
            CatalogEntry::new("sl2+abelian-1", sa)
                .facts([Lie(true), Solvable(false), Simple(false)])
                .cartan([cartan])
                .levi(levi, rad),
        );
        let sn = sl2_natural::<F>();
        let (levi, rad) = (sn.span_labels(&["e", "f", "h"]), sn.span_labels(&["v1", "v2"]));
        let cartan = sn.span_labels(&["h"]);
        out.push(
            CatalogEntry::new("sl2-natural", sn)
                .facts([Lie(true), Solvable(false), Simple(false)])
                .cartan([cartan])
                .levi(levi, rad),
        );
        let sl = sl2_natural_leibniz::<F>();
        let (levi, rad) = (sl.span_labels(&["e", "f", "h"]), sl.span_labels(&["v1", "v2"]));
        out.push(
            CatalogEntry::new("sl2-natural-leibniz", sl)
                .facts([Lie(false), Solvable(false), Simple(true)])
                .levi(levi, rad),
        );
    }
    out
}

pub fn catalog_entry<F: Field>(name: &str) -> Result<CatalogEntry<F>, CatalogError> {
    catalog::<F>()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusMode {
    Exhaustive,
    Catalog,
    RandomExtension,
}

/// Verifiable extra data attached to an algebra.
#[derive(Clone, Debug)]
pub struct Annotations<F: Field> {
    pub levi: Option<LeviData<F>>,
    pub cartan: Vec<Subspace<F>>,
}

impl<F: Field> Default for Annotations<F> {
    fn default() -> Self {
        Annotations { levi: None, cartan: Vec::new() }
    }
}

#[derive(Clone, Debug)]
pub struct Corpus<F: Field> {
    pub field: FieldSpec,
    pub dim: Option<usize>,
    pub mode: CorpusMode,
    pub seed: Option<u64>,
    pub algebras: Vec<LeibnizAlgebra<F>>,
    pub names: Vec<String>,
    /// Parallel to `algebras`.
    pub annotations: Vec<Annotations<F>>,
}

impl<F: Field> Corpus<F> {
    pub fn len(&self) -> usize {
        self.algebras.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebras.is_empty()
    }

    pub fn descriptor(&self) -> String {
        let mode = match self.mode {
            CorpusMode::Exhaustive => "exhaustive",
            CorpusMode::Catalog => "catalog",
            CorpusMode::RandomExtension => "random-extension",
        };
        let mut s = format!("{mode} {}", self.field);
        if let Some(d) = self.dim {
            s.push_str(&format!(" dim {d}"));
        }
        if let Some(seed) = self.seed {
            s.push_str(&format!(" seed {seed}"));
        }
        s
    }

    pub fn from_catalog(entries: Vec<CatalogEntry<F>>) -> Self {
        let mut corpus = Corpus {
            field: F::spec(),
            dim: None,
            mode: CorpusMode::Catalog,
            seed: None,
            algebras: Vec::new(),
            names: Vec::new(),
            annotations: Vec::new(),
        };
        for e in entries {
            corpus.names.push(e.name);
            corpus.algebras.push(e.algebra);
            corpus.annotations.push(Annotations { levi: e.levi, cartan: e.cartan });
        }
        corpus
    }

    /// A single algebra, e.g. one loaded from a file.
    pub fn single(name: impl Into<String>, algebra: LeibnizAlgebra<F>, annotations: Annotations<F>) -> Self {
        Corpus {
            field: F::spec(),
            dim: Some(algebra.dim()),
            mode: CorpusMode::Catalog,
            seed: None,
            algebras: vec![algebra],
            names: vec![name.into()],
            annotations: vec![annotations],
        }
    }

    fn numbered(field: FieldSpec, dim: usize, mode: CorpusMode, seed: Option<u64>, algebras: Vec<LeibnizAlgebra<F>>) -> Self {
        let names = (0..algebras.len()).map(|i| format!("#{i}")).collect();
        let annotations = vec![Annotations::default(); algebras.len()];
        Corpus { field, dim: Some(dim), mode, seed, algebras, names, annotations }
    }
}

/// Recorded sizes of the exhaustive corpora.
pub fn golden_count(dim: usize, p: u32) -> Option<usize> {
    match (dim, p) {
        (0 | 1, _) => Some(1),
        (2, 2) => Some(13),
        (2, 3) => Some(41),
        (2, 5) => Some(169),
        (3, 2) => Some(806),
        (3, 3) => Some(15861),
        _ => None,
    }
}

/// Largest `p^(n^3)` table space the enumerator accepts without pruning
/// guarantees: dimension 2 for `p <= 5`, dimension 3 for `p <= 3`.
pub fn within_budget(dim: usize, p: u32) -> bool {
    match dim {
        0 | 1 => true,
        2 => p <= 5,
        3 => p <= 3,
        _ => false,
    }
}

/// Every right Leibniz table of dimension `dim` over the finite field `F`,
/// in lexicographic order of the flattened table.
///
/// The structure constants are the unknowns and the coordinates of the
/// identity on basis triples are quadratic equations in them. Backtracking
/// assigns products in order of their largest index, rejects as soon as an
/// equation is fully determined and nonzero, and forces any unknown that is
/// the last open linear term of an equation. The search is split on the
/// square of the first basis vector and the parts merged in order.
pub fn enumerate_corpus<F: Field>(dim: usize) -> Result<Corpus<F>, CatalogError> {
    let p = F::characteristic();
    if !F::is_finite() || !within_budget(dim, p) {
        return Err(CatalogError::Budget { dim, field: F::spec() });
    }
    let algebras = enumerate_tables::<F>(dim)
        .into_iter()
        .map(|data| LeibnizAlgebra::trusted(StructureTable::new(default_labels(dim), data).expect("shape")))
        .collect();
    Ok(Corpus::numbered(F::spec(), dim, CorpusMode::Exhaustive, None, algebras))
}

/// Monomials `sign * t[a] * t[b]` of one coordinate of the right identity.
type Equation = Vec<(usize, usize, bool)>;

fn identity_equations(n: usize) -> Vec<Equation> {
    let v = |a: usize, b: usize, l: usize| (a * n + b) * n + l;
    let mut eqs = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
                    let mut e = Vec::with_capacity(3 * n);
                    for m in 0..n {
                        e.push((v(j, k, m), v(i, m, l), true));
                        e.push((v(i, j, m), v(m, k, l), false));
                        e.push((v(i, k, m), v(m, j, l), true));
                    }
                    eqs.push(e);
                }
            }
        }
    }
    eqs
}

fn enumerate_tables<F: Field>(n: usize) -> Vec<Vec<F>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let eqs = identity_equations(n);
    let mut by_var = vec![Vec::new(); n * n * n];
    for (q, e) in eqs.iter().enumerate() {
        for &(a, b, _) in e {
            for x in [a, b] {
                if by_var[x].last() != Some(&q) {
                    by_var[x].push(q);
                }
            }
        }
    }
    let mut products: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..n).map(move |a| (a, b))).collect();
    products.sort_by_key(|&(a, b)| (a.max(b), b, a));
    let order: Vec<usize> = products.iter().flat_map(|&(a, b)| (0..n).map(move |l| (a * n + b) * n + l)).collect();
    let elements = F::elements().expect("finite");
    let squares = crate::linalg::all_vectors::<F>(n).expect("finite");
    let mut tables: Vec<Vec<F>> = squares
        .par_iter()
        .map(|sq| {
            let mut search = Search {
                eqs: &eqs,
                by_var: &by_var,
                order: &order,
                elements: &elements,
                val: vec![F::zero(); n * n * n],
                set: vec![false; n * n * n],
                out: Vec::new(),
            };
            for (l, c) in sq.iter().enumerate() {
                search.val[l] = c.clone();
                search.set[l] = true;
            }
            if (0..n).all(|l| search.settled(l)) {
                search.run();
            }
            search.out
        })
        .flatten()
        .collect();
    tables.sort();
    tables
}

struct Search<'a, F: Field> {
    eqs: &'a [Equation],
    by_var: &'a [Vec<usize>],
    order: &'a [usize],
    elements: &'a [F],
    val: Vec<F>,
    set: Vec<bool>,
    out: Vec<Vec<F>>,
}

enum Status<F> {
    Violated,
    Holds,
    Forces(usize, F),
    Open,
}

impl<F: Field> Search<'_, F> {
    fn is_known_zero(&self, x: usize) -> bool {
        self.set[x] && self.val[x].is_zero()
    }

    fn status(&self, q: usize) -> Status<F> {
        let mut sum = F::zero();
        let mut unit: Option<(usize, F)> = None;
        let mut open = 0;
        for &(a, b, plus) in &self.eqs[q] {
            if self.is_known_zero(a) || self.is_known_zero(b) {
                continue;
            }
            let term = match (self.set[a], self.set[b]) {
                (true, true) => self.val[a].clone() * self.val[b].clone(),
                (true, false) | (false, true) => {
                    let (y, c) = if self.set[a] { (b, &self.val[a]) } else { (a, &self.val[b]) };
                    open += 1;
                    unit = Some((y, if plus { c.clone() } else { -c.clone() }));
                    continue;
                }
                (false, false) => return Status::Open,
            };
            if plus {
                sum += term;
            } else {
                sum -= term;
            }
        }
        match (open, unit) {
            (0, _) if sum.is_zero() => Status::Holds,
            (0, _) => Status::Violated,
            (1, Some((y, c))) => Status::Forces(y, -sum / c),
            _ => Status::Open,
        }
    }

    /// No fully determined equation through `x` fails.
    fn settled(&self, x: usize) -> bool {
        self.by_var[x].iter().all(|&q| !matches!(self.status(q), Status::Violated))
    }

    /// Assigns forced unknowns to a fixpoint; `false` on a contradiction.
    fn propagate(&mut self, trail: &mut Vec<usize>) -> bool {
        loop {
            let mut changed = false;
            for q in 0..self.eqs.len() {
                match self.status(q) {
                    Status::Violated => return false,
                    Status::Forces(y, v) => {
                        self.val[y] = v;
                        self.set[y] = true;
                        trail.push(y);
                        changed = true;
                    }
                    Status::Holds | Status::Open => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn undo(&mut self, trail: &[usize]) {
        for &y in trail {
            self.set[y] = false;
            self.val[y] = F::zero();
        }
    }

    fn run(&mut self) {
        let mut trail = Vec::new();
        if self.propagate(&mut trail) {
            match self.order.iter().copied().find(|&x| !self.set[x]) {
                None => self.out.push(self.val.clone()),
                Some(x) => {
                    self.set[x] = true;
                    for c in self.elements {
                        self.val[x] = c.clone();
                        if self.settled(x) {
                            self.run();
                        }
                    }
                    self.set[x] = false;
                    self.val[x] = F::zero();
                }
            }
        }
        self.undo(&trail);
    }
}

/// Algebras built by repeated one-dimensional extensions with random actions,
/// starting from the zero algebra; candidates failing the right identity are
/// rejected. Deterministic in `seed`.
pub fn random_extension_corpus<F: Field>(
    seed: u64,
    dim: usize,
    count: usize,
) -> Result<Corpus<F>, CatalogError> {
    let elements = F::elements().ok_or(CatalogError::Budget { dim, field: F::spec() })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut algebras = Vec::with_capacity(count);
    while algebras.len() < count {
        let mut l = LeibnizAlgebra::<F>::abelian(0);
        while l.dim() < dim {
            l = random_extension(&l, &elements, &mut rng);
        }
        algebras.push(l);
    }
    Ok(Corpus::numbered(F::spec(), dim, CorpusMode::RandomExtension, Some(seed), algebras))
}

fn random_vector<F: Field>(n: usize, elements: &[F], rng: &mut ChaCha8Rng, density: f64) -> Vector<F> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(density) {
                elements[rng.gen_range(0..elements.len())].clone()
            } else {
                F::zero()
            }
        })
        .collect()
}

fn random_combination<F: Field>(
    n: usize,
    basis: &[LinearMap<F>],
    elements: &[F],
    rng: &mut ChaCha8Rng,
) -> LinearMap<F> {
    let mut images = vec![zero_vector::<F>(n); n];
    for d in basis {
        let c = &elements[rng.gen_range(0..elements.len())];
        for (col, img) in images.iter_mut().enumerate() {
            crate::linalg::axpy(img, c, d.image_of_unit(col));
        }
    }
    LinearMap::from_images(n, images)
}

/// One random extension. The right action `v -> [v, x]` is a random
/// combination of a derivation basis. Sampled left actions and squares are
/// tried first, then zero and negated left actions with zero square, and
/// finally the direct sum with a line, which is always right Leibniz.
fn random_extension<F: Field>(l: &LeibnizAlgebra<F>, elements: &[F], rng: &mut ChaCha8Rng) -> LeibnizAlgebra<F> {
    let n = l.dim();
    let ders = l.derivations();
    let right = random_combination(n, &ders, elements, rng);
    let zero = LinearMap::from_images(n, vec![zero_vector(n); n]);
    let negated = LinearMap::from_images(
        n,
        (0..n).map(|i| right.image_of_unit(i).iter().map(|c| -c.clone()).collect()).collect(),
    );
    for _ in 0..8 {
        let density = rng.gen_range(0.2..0.8);
        let left = match rng.gen_range(0..4) {
            0 => zero.clone(),
            1 => negated.clone(),
            _ => LinearMap::from_images(n, (0..n).map(|_| random_vector(n, elements, rng, density)).collect()),
        };
        let square = if rng.gen_bool(0.5) { zero_vector(n) } else { random_vector(n, elements, rng, density) };
        if let Ok(ext) = one_dim_extension(l, &right, &left, &square) {
            return ext;
        }
    }
    for left in [&zero, &negated] {
        if let Ok(ext) = one_dim_extension(l, &right, left, &zero_vector(n)) {
            return ext;
        }
    }
    one_dim_extension(l, &zero, &zero, &zero_vector(n)).expect("direct sum with a line")
}
