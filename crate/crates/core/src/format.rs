//! Structure-constant documents.
//!
//! A document is a JSON object with a `kind`, a `name`, a `field` (`"Q"` or
//! a prime written in decimal) and sparse tensors stored as entry lists
//! `[indices..., numerator, denominator]`. [`write`] emits a canonical
//! layout, so `write(parse(text)) == text` for every canonical file.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hopf::*;
use crate::linalg::{Field, Matrix};

type Entries = Vec<Vec<i64>>;

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mul: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comul: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    counit: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode_inverse: Option<Entries>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    kind: String,
    name: String,
    field: String,
    hopf: RawSpace,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    algebra: Option<RawSpace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coalgebra: Option<RawSpace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    module: Option<RawSpace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    action: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coaction: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coalgebra_action: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    module_action: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    module_coaction: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tau: Option<Entries>,
}

/// The typed content of a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure<F: Field> {
    Hopf(HopfAlgebraData<F>),
    ModuleAlgebra(ModuleAlgebra<F>),
    ComoduleAlgebra(ComoduleAlgebra<F>),
    ComoduleCoalgebra(ComoduleCoalgebra<F>),
    ModComodule(ModComodule<F>),
    Pairing(EquivariantPairing<F>),
    /// A covector on `A ⊗ M`, index `a * dim M + m`.
    Trace { alg: ModuleAlgebra<F>, m: ModComodule<F>, tau: Vec<F> },
}

impl<F: Field> Structure<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Hopf(_) => "hopf",
            Structure::ModuleAlgebra(_) => "module-algebra",
            Structure::ComoduleAlgebra(_) => "comodule-algebra",
            Structure::ComoduleCoalgebra(_) => "comodule-coalgebra",
            Structure::ModComodule(_) => "modcomodule",
            Structure::Pairing(_) => "pairing",
            Structure::Trace { .. } => "trace",
        }
    }

    pub fn hopf(&self) -> &HopfAlgebraData<F> {
        match self {
            Structure::Hopf(h) => h,
            Structure::ModuleAlgebra(a) => &a.hopf,
            Structure::ComoduleAlgebra(b) => &b.hopf,
            Structure::ComoduleCoalgebra(z) => &z.hopf,
            Structure::ModComodule(m) => &m.hopf,
            Structure::Pairing(p) => &p.alg.hopf,
            Structure::Trace { alg, .. } => &alg.hopf,
        }
    }

    /// The axiom report of the underlying structure.
    pub fn check(&self) -> crate::report::Report {
        match self {
            Structure::Hopf(h) => h.check_structure(),
            Structure::ModuleAlgebra(a) => a.check_structure(),
            Structure::ComoduleAlgebra(b) => b.check_structure(),
            Structure::ComoduleCoalgebra(z) => z.check_structure(),
            Structure::ModComodule(m) => m.check_structure(),
            Structure::Pairing(p) => {
                let mut r = p.coalg.check_structure().prefixed("coalgebra");
                r.merge(p.alg.check_structure().prefixed("algebra"));
                match check_equivariant(p) {
                    Ok(e) => r.merge(e.prefixed("pairing")),
                    Err(e) => r.fail("pairing is equivariant", e.to_string()),
                }
                r
            }
            Structure::Trace { alg, m, .. } => {
                let mut r = alg.check_structure().prefixed("algebra");
                r.merge(m.check_structure().prefixed("module"));
                r
            }
        }
    }
}

/// Basis labels of the spaces in a document.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels {
    pub hopf: Vec<String>,
    pub algebra: Option<Vec<String>>,
    pub coalgebra: Option<Vec<String>>,
    pub module: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document<F: Field> {
    pub name: String,
    pub labels: Labels,
    pub structure: Structure<F>,
}

fn default_labels(prefix: &str, d: usize) -> Vec<String> {
    (0..d).map(|i| format!("{prefix}{i}")).collect()
}

impl<F: Field> Document<F> {
    /// A document with generated labels `h0, a0, c0, m0, ...`.
    pub fn new(name: impl Into<String>, structure: Structure<F>) -> Self {
        let hopf = default_labels("h", structure.hopf().dim());
        let (algebra, coalgebra, module) = match &structure {
            Structure::Hopf(_) => (None, None, None),
            Structure::ModuleAlgebra(a) => (Some(a.algebra.dim), None, None),
            Structure::ComoduleAlgebra(b) => (Some(b.algebra.dim), None, None),
            Structure::ComoduleCoalgebra(z) => (None, Some(z.coalgebra.dim), None),
            Structure::ModComodule(m) => (None, None, Some(m.dim)),
            Structure::Pairing(p) => (Some(p.alg.algebra.dim), Some(p.coalg.coalgebra.dim), None),
            Structure::Trace { alg, m, .. } => (Some(alg.algebra.dim), None, Some(m.dim)),
        };
        let labels = Labels {
            hopf,
            algebra: algebra.map(|d| default_labels("a", d)),
            coalgebra: coalgebra.map(|d| default_labels("c", d)),
            module: module.map(|d| default_labels("m", d)),
        };
        Document { name: name.into(), labels, structure }
    }
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Checks a `field` tag against the field `F` values are read into.
/// Rational constants may be reduced into a prime field.
fn check_field<F: Field>(tag: &str) -> Result<()> {
    if tag == "Q" {
        return Ok(());
    }
    let p: u64 = tag.parse().map_err(|_| perr(format!("field: expected \"Q\" or a prime, found {tag:?}")))?;
    if !crate::linalg::field::is_prime(p) {
        return Err(perr(format!("field: {p} is not prime")));
    }
    if F::characteristic() != p {
        return Err(perr(format!("field: document is over F_{p} but was read over {}", F::label())));
    }
    Ok(())
}

struct Reader<'a> {
    path: &'a str,
}

impl Reader<'_> {
    fn scalar(&self, e: &[i64], k: usize) -> Result<(BigInt, BigInt)> {
        let (n, d) = (e[k], e[k + 1]);
        if d == 0 {
            return Err(perr(format!("{}: zero denominator in entry {e:?}", self.path)));
        }
        Ok((BigInt::from(n), BigInt::from(d)))
    }

    /// Entries of arity `dims.len()` followed by a numerator and denominator.
    fn entries<F: Field>(&self, raw: &Option<Entries>, dims: &[usize]) -> Result<Vec<(Vec<usize>, F)>> {
        let raw = raw.as_ref().ok_or_else(|| perr(format!("{}: missing", self.path)))?;
        let mut out = Vec::with_capacity(raw.len());
        for (row, e) in raw.iter().enumerate() {
            if e.len() != dims.len() + 2 {
                return Err(perr(format!("{} entry {row}: expected {} numbers, found {}", self.path, dims.len() + 2, e.len())));
            }
            let mut idx = Vec::with_capacity(dims.len());
            for (k, &d) in dims.iter().enumerate() {
                let i = usize::try_from(e[k]).ok().filter(|&i| i < d).ok_or_else(|| {
                    perr(format!("{} entry {row}: index {} out of range 0..{d}", self.path, e[k]))
                })?;
                idx.push(i);
            }
            let (n, d) = self.scalar(e, dims.len())?;
            let v = F::from_ratio(&n, &d)
                .ok_or_else(|| perr(format!("{} entry {row}: {n}/{d} has no value over {}", self.path, F::label())))?;
            out.push((idx, v));
        }
        Ok(out)
    }
}

fn reader(path: &str) -> Reader<'_> {
    Reader { path }
}

/// Sums entries into a matrix, indexing rows and columns by mixed radix.
fn assemble<F: Field>(entries: Vec<(Vec<usize>, F)>, rows: usize, cols: usize, row: impl Fn(&[usize]) -> usize, col: impl Fn(&[usize]) -> usize) -> Matrix<F> {
    let t = entries.into_iter().map(|(i, v)| (row(&i), col(&i), v)).collect();
    Matrix::from_triplets(rows, cols, t)
}

fn vector<F: Field>(entries: Vec<(Vec<usize>, F)>, d: usize) -> Vec<F> {
    let mut v = vec![F::zero(); d];
    for (i, x) in entries {
        v[i[0]] = v[i[0]].clone() + x;
    }
    v
}

fn basis(space: &RawSpace, path: &str) -> Result<usize> {
    if space.basis.is_empty() {
        return Err(perr(format!("{path}.basis: empty basis")));
    }
    let mut seen = std::collections::BTreeSet::new();
    for l in &space.basis {
        if !seen.insert(l) {
            return Err(perr(format!("{path}.basis: duplicate label {l:?}")));
        }
    }
    Ok(space.basis.len())
}

fn read_algebra<F: Field>(s: &RawSpace, path: &str) -> Result<AlgebraData<F>> {
    let d = basis(s, path)?;
    let mul = assemble(reader(&format!("{path}.mul")).entries(&s.mul, &[d, d, d])?, d, d * d, |i| i[2], |i| i[0] * d + i[1]);
    let unit = vector(reader(&format!("{path}.unit")).entries(&s.unit, &[d])?, d);
    AlgebraData::new(d, mul, unit)
}

fn read_coalgebra<F: Field>(s: &RawSpace, path: &str) -> Result<CoalgebraData<F>> {
    let d = basis(s, path)?;
    let comul =
        assemble(reader(&format!("{path}.comul")).entries(&s.comul, &[d, d, d])?, d * d, d, |i| i[1] * d + i[2], |i| i[0]);
    let counit = vector(reader(&format!("{path}.counit")).entries(&s.counit, &[d])?, d);
    CoalgebraData::new(d, comul, counit)
}

fn read_hopf<F: Field>(s: &RawSpace) -> Result<HopfAlgebraData<F>> {
    let algebra = read_algebra(s, "hopf")?;
    let coalgebra = read_coalgebra(s, "hopf")?;
    let d = algebra.dim;
    let antipode = assemble(reader("hopf.antipode").entries(&s.antipode, &[d, d])?, d, d, |i| i[1], |i| i[0]);
    let inverse = match &s.antipode_inverse {
        Some(_) => Some(assemble(reader("hopf.antipode_inverse").entries(&s.antipode_inverse, &[d, d])?, d, d, |i| i[1], |i| i[0])),
        None => None,
    };
    HopfAlgebraData::new(algebra, coalgebra, antipode, inverse)
}

fn action<F: Field>(raw: &Option<Entries>, path: &str, dh: usize, d: usize) -> Result<Matrix<F>> {
    Ok(assemble(reader(path).entries(raw, &[dh, d, d])?, d, dh * d, |i| i[2], |i| i[0] * d + i[1]))
}

fn coaction<F: Field>(raw: &Option<Entries>, path: &str, dh: usize, d: usize) -> Result<Matrix<F>> {
    Ok(assemble(reader(path).entries(raw, &[d, dh, d])?, dh * d, d, |i| i[1] * d + i[2], |i| i[0]))
}

fn require<'a>(s: &'a Option<RawSpace>, path: &str) -> Result<&'a RawSpace> {
    s.as_ref().ok_or_else(|| perr(format!("{path}: missing")))
}

fn module_dim(s: &RawSpace) -> Result<usize> {
    if s.mul.is_some() || s.unit.is_some() || s.comul.is_some() || s.counit.is_some() || s.antipode.is_some() || s.antipode_inverse.is_some() {
        return Err(perr("module: only a basis is allowed"));
    }
    basis(s, "module")
}

/// Reads a document without checking axioms.
pub fn parse_unchecked<F: Field>(text: &str) -> Result<Document<F>> {
    let raw: RawDoc = serde_json::from_str(text).map_err(|e| perr(format!("line {} column {}: {e}", e.line(), e.column())))?;
    check_field::<F>(&raw.field)?;
    let hopf: HopfAlgebraData<F> = read_hopf(&raw.hopf)?;
    let dh = hopf.dim();
    let mut labels = Labels { hopf: raw.hopf.basis.clone(), ..Labels::default() };
    let structure = match raw.kind.as_str() {
        "hopf" => Structure::Hopf(hopf),
        "module-algebra" => {
            let s = require(&raw.algebra, "algebra")?;
            let alg = read_algebra(s, "algebra")?;
            labels.algebra = Some(s.basis.clone());
            let act = action(&raw.action, "action", dh, alg.dim)?;
            Structure::ModuleAlgebra(ModuleAlgebra::new(hopf, alg, act)?)
        }
        "comodule-algebra" => {
            let s = require(&raw.algebra, "algebra")?;
            let alg = read_algebra(s, "algebra")?;
            labels.algebra = Some(s.basis.clone());
            let co = coaction(&raw.coaction, "coaction", dh, alg.dim)?;
            Structure::ComoduleAlgebra(ComoduleAlgebra::new(hopf, alg, co)?)
        }
        "comodule-coalgebra" => {
            let s = require(&raw.coalgebra, "coalgebra")?;
            let c = read_coalgebra(s, "coalgebra")?;
            labels.coalgebra = Some(s.basis.clone());
            let co = coaction(&raw.coaction, "coaction", dh, c.dim)?;
            Structure::ComoduleCoalgebra(ComoduleCoalgebra::new(hopf, c, co)?)
        }
        "modcomodule" => {
            let s = require(&raw.module, "module")?;
            let d = module_dim(s)?;
            labels.module = Some(s.basis.clone());
            let act = action(&raw.action, "action", dh, d)?;
            let co = coaction(&raw.coaction, "coaction", dh, d)?;
            Structure::ModComodule(ModComodule::new(hopf, d, act, co)?)
        }
        "pairing" => {
            let sc = require(&raw.coalgebra, "coalgebra")?;
            let sa = require(&raw.algebra, "algebra")?;
            let c = read_coalgebra(sc, "coalgebra")?;
            let a = read_algebra(sa, "algebra")?;
            labels.coalgebra = Some(sc.basis.clone());
            labels.algebra = Some(sa.basis.clone());
            let (dc, da) = (c.dim, a.dim);
            let cact = action(&raw.coalgebra_action, "coalgebra_action", dh, dc)?;
            let aact = action(&raw.action, "action", dh, da)?;
            let phi = assemble(reader("phi").entries(&raw.phi, &[dc, da, da])?, da, dc * da, |i| i[2], |i| i[0] * da + i[1]);
            Structure::Pairing(EquivariantPairing {
                coalg: ModuleCoalgebra::new(hopf.clone(), c, cact)?,
                alg: ModuleAlgebra::new(hopf, a, aact)?,
                phi,
            })
        }
        "trace" => {
            let sa = require(&raw.algebra, "algebra")?;
            let sm = require(&raw.module, "module")?;
            let a = read_algebra(sa, "algebra")?;
            let dm = module_dim(sm)?;
            labels.algebra = Some(sa.basis.clone());
            labels.module = Some(sm.basis.clone());
            let da = a.dim;
            let aact = action(&raw.action, "action", dh, da)?;
            let mact = action(&raw.module_action, "module_action", dh, dm)?;
            let mco = coaction(&raw.module_coaction, "module_coaction", dh, dm)?;
            let tau = reader("tau").entries(&raw.tau, &[da, dm])?;
            let tau = vector(tau.into_iter().map(|(i, v)| (vec![i[0] * dm + i[1]], v)).collect(), da * dm);
            Structure::Trace { alg: ModuleAlgebra::new(hopf.clone(), a, aact)?, m: ModComodule::new(hopf, dm, mact, mco)?, tau }
        }
        other => return Err(perr(format!("kind: unknown kind {other:?}"))),
    };
    let expected = expected_fields(structure.kind());
    for (name, present) in present_fields(&raw) {
        if present && !expected.contains(&name) {
            return Err(perr(format!("{name}: not allowed for kind {:?}", raw.kind)));
        }
    }
    Ok(Document { name: raw.name, labels, structure })
}

fn expected_fields(kind: &str) -> &'static [&'static str] {
    match kind {
        "hopf" => &[],
        "module-algebra" => &["algebra", "action"],
        "comodule-algebra" => &["algebra", "coaction"],
        "comodule-coalgebra" => &["coalgebra", "coaction"],
        "modcomodule" => &["module", "action", "coaction"],
        "pairing" => &["algebra", "coalgebra", "action", "coalgebra_action", "phi"],
        _ => &["algebra", "module", "action", "module_action", "module_coaction", "tau"],
    }
}

fn present_fields(r: &RawDoc) -> [(&'static str, bool); 10] {
    [
        ("algebra", r.algebra.is_some()),
        ("coalgebra", r.coalgebra.is_some()),
        ("module", r.module.is_some()),
        ("action", r.action.is_some()),
        ("coaction", r.coaction.is_some()),
        ("coalgebra_action", r.coalgebra_action.is_some()),
        ("module_action", r.module_action.is_some()),
        ("module_coaction", r.module_coaction.is_some()),
        ("phi", r.phi.is_some()),
        ("tau", r.tau.is_some()),
    ]
}

/// Reads a document and checks the axioms of its structure.
pub fn parse<F: Field>(text: &str) -> Result<Document<F>> {
    let doc = parse_unchecked::<F>(text)?;
    let r = doc.structure.check();
    if !r.is_empty() {
        return Err(Error::Validation(r.to_string().trim().to_string()));
    }
    Ok(doc)
}

fn ratio<F: Field>(x: &F) -> Result<(i64, i64)> {
    let (n, d) = x.to_ratio();
    match (n.to_i64(), d.to_i64()) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(Error::Validation(format!("constant {x} does not fit in 64-bit numerator and denominator"))),
    }
}

/// Entries of a matrix with row and column split into mixed-radix indices.
fn emit<F: Field>(m: &Matrix<F>, index: impl Fn(usize, usize) -> Vec<usize>) -> Result<Entries> {
    let mut out = Vec::new();
    for (c, col) in m.columns().iter().enumerate() {
        for (r, v) in col {
            let (n, d) = ratio(v)?;
            let mut e: Vec<i64> = index(*r, c).into_iter().map(|i| i as i64).collect();
            e.extend([n, d]);
            out.push(e);
        }
    }
    out.sort();
    Ok(out)
}

fn emit_vector<F: Field>(v: &[F], index: impl Fn(usize) -> Vec<usize>) -> Result<Entries> {
    let mut out = Vec::new();
    for (i, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        let (n, d) = ratio(x)?;
        let mut e: Vec<i64> = index(i).into_iter().map(|i| i as i64).collect();
        e.extend([n, d]);
        out.push(e);
    }
    Ok(out)
}

fn raw_algebra<F: Field>(a: &AlgebraData<F>, basis: &[String]) -> Result<RawSpace> {
    let d = a.dim;
    Ok(RawSpace {
        basis: basis.to_vec(),
        mul: Some(emit(&a.mul, |r, c| vec![c / d, c % d, r])?),
        unit: Some(emit_vector(&a.unit, |i| vec![i])?),
        ..RawSpace::default()
    })
}

fn raw_coalgebra<F: Field>(c: &CoalgebraData<F>, basis: &[String]) -> Result<RawSpace> {
    let d = c.dim;
    Ok(RawSpace {
        basis: basis.to_vec(),
        comul: Some(emit(&c.comul, |r, col| vec![col, r / d, r % d])?),
        counit: Some(emit_vector(&c.counit, |i| vec![i])?),
        ..RawSpace::default()
    })
}

fn raw_action<F: Field>(m: &Matrix<F>, d: usize) -> Result<Entries> {
    emit(m, |r, c| vec![c / d, c % d, r])
}

fn raw_coaction<F: Field>(m: &Matrix<F>, d: usize) -> Result<Entries> {
    emit(m, |r, c| vec![c, r / d, r % d])
}

fn labels_or(l: &Option<Vec<String>>, prefix: &str, d: usize) -> Vec<String> {
    l.clone().unwrap_or_else(|| default_labels(prefix, d))
}

fn to_raw<F: Field>(doc: &Document<F>) -> Result<RawDoc> {
    let h = doc.structure.hopf();
    let l = &doc.labels;
    let mut hopf = raw_algebra(&h.algebra, &l.hopf)?;
    let c = raw_coalgebra(&h.coalgebra, &l.hopf)?;
    hopf.comul = c.comul;
    hopf.counit = c.counit;
    hopf.antipode = Some(emit(&h.antipode, |r, c| vec![c, r])?);
    hopf.antipode_inverse = Some(emit(&h.antipode_inv, |r, c| vec![c, r])?);
    let mut raw = RawDoc {
        kind: doc.structure.kind().into(),
        name: doc.name.clone(),
        field: F::label(),
        hopf,
        ..RawDoc::default()
    };
    match &doc.structure {
        Structure::Hopf(_) => {}
        Structure::ModuleAlgebra(a) => {
            raw.algebra = Some(raw_algebra(&a.algebra, &labels_or(&l.algebra, "a", a.algebra.dim))?);
            raw.action = Some(raw_action(&a.action, a.algebra.dim)?);
        }
        Structure::ComoduleAlgebra(b) => {
            raw.algebra = Some(raw_algebra(&b.algebra, &labels_or(&l.algebra, "a", b.algebra.dim))?);
            raw.coaction = Some(raw_coaction(&b.coaction, b.algebra.dim)?);
        }
        Structure::ComoduleCoalgebra(z) => {
            raw.coalgebra = Some(raw_coalgebra(&z.coalgebra, &labels_or(&l.coalgebra, "c", z.coalgebra.dim))?);
            raw.coaction = Some(raw_coaction(&z.coaction, z.coalgebra.dim)?);
        }
        Structure::ModComodule(m) => {
            raw.module = Some(RawSpace { basis: labels_or(&l.module, "m", m.dim), ..RawSpace::default() });
            raw.action = Some(raw_action(&m.action, m.dim)?);
            raw.coaction = Some(raw_coaction(&m.coaction, m.dim)?);
        }
        Structure::Pairing(p) => {
            let (dc, da) = (p.coalg.coalgebra.dim, p.alg.algebra.dim);
            raw.coalgebra = Some(raw_coalgebra(&p.coalg.coalgebra, &labels_or(&l.coalgebra, "c", dc))?);
            raw.algebra = Some(raw_algebra(&p.alg.algebra, &labels_or(&l.algebra, "a", da))?);
            raw.coalgebra_action = Some(raw_action(&p.coalg.action, dc)?);
            raw.action = Some(raw_action(&p.alg.action, da)?);
            raw.phi = Some(emit(&p.phi, |r, c| vec![c / da, c % da, r])?);
        }
        Structure::Trace { alg, m, tau } => {
            let (da, dm) = (alg.algebra.dim, m.dim);
            raw.algebra = Some(raw_algebra(&alg.algebra, &labels_or(&l.algebra, "a", da))?);
            raw.module = Some(RawSpace { basis: labels_or(&l.module, "m", dm), ..RawSpace::default() });
            raw.action = Some(raw_action(&alg.action, da)?);
            raw.module_action = Some(raw_action(&m.action, dm)?);
            raw.module_coaction = Some(raw_coaction(&m.coaction, dm)?);
            raw.tau = Some(emit_vector(tau, |i| vec![i / dm, i % dm])?);
        }
    }
    Ok(raw)
}

/// Canonical text: sorted keys, one key per line, one entry per line.
pub fn write<F: Field>(doc: &Document<F>) -> Result<String> {
    let value = serde_json::to_value(to_raw(doc)?).map_err(|e| Error::Validation(e.to_string()))?;
    let mut out = String::new();
    emit_value(&value, 0, &mut out);
    out.push('\n');
    Ok(out)
}

fn emit_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(map) => {
            let sorted: BTreeMap<_, _> = map.iter().collect();
            out.push_str("{\n");
            for (i, (k, x)) in sorted.iter().enumerate() {
                let _ = write!(out, "{pad}{}: ", Value::String((*k).clone()));
                emit_value(x, indent + 1, out);
                out.push_str(if i + 1 < sorted.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", "  ".repeat(indent));
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_array()) => {
            if xs.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                emit_value(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", "  ".repeat(indent));
        }
        Value::Array(xs) => {
            let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            let _ = write!(out, "[{}]", items.join(", "));
        }
        other => out.push_str(&other.to_string()),
    }
}

/// Reads and validates the file at `path`.
pub fn parse_file<F: Field>(path: &std::path::Path) -> Result<Document<F>> {
    let text = std::fs::read_to_string(path).map_err(|e| perr(format!("{}: {e}", path.display())))?;
    parse(&text)
}
