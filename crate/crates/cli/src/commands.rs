//! The subcommands, generic over the coefficient field.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::json;

use hopfcyc::cyclic::*;
use hopfcyc::fixtures;
use hopfcyc::format::{parse, parse_unchecked, write, Document, Structure};
use hopfcyc::homology::*;
use hopfcyc::hopf::*;
use hopfcyc::pairings::*;
use hopfcyc::{Field, Matrix, SparseVec};

use crate::job::{table, Control, JobSpec, Section, XiChoice};

fn load<F: Field>(path: &std::path::Path) -> Result<Document<F>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse::<F>(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

/// The first SAYD modular pair in candidate order; `(1, ε)` when it is SAYD.
pub fn default_coefficients<F: Field>(hopf: &HopfAlgebraData<F>) -> ModComodule<F> {
    fixtures::modular_pair_candidates(hopf)
        .into_iter()
        .find(|(_, ok)| *ok)
        .map(|(p, _)| modular_pair_module(hopf, &p))
        .unwrap_or_else(|| ModComodule::trivial(hopf.clone()))
}

fn coefficients<F: Field>(job: &JobSpec, hopf: &HopfAlgebraData<F>) -> Result<ModComodule<F>> {
    let Some(path) = &job.coefficients else { return Ok(default_coefficients(hopf)) };
    match load::<F>(path)?.structure {
        Structure::ModComodule(m) if m.hopf == *hopf => Ok(m),
        Structure::ModComodule(_) => bail!("{}: coefficients are over a different Hopf algebra", path.display()),
        _ => bail!("{}: expected a modcomodule document", path.display()),
    }
}

fn rep<F: Field>(v: &SparseVec<F>) -> serde_json::Value {
    json!(v.iter().map(|(i, c)| (i, c.to_string())).collect::<Vec<_>>())
}

fn show<F: Field>(v: &SparseVec<F>) -> String {
    let parts: Vec<String> = v.iter().map(|(i, c)| format!("{c}·e{i}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn join_dims(d: &[usize]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Axioms of a module, plus cyclicity when `cyclic` is requested.
fn axioms<F: Field>(x: &ParaCyclicModule<F>, cyclic: bool, job: &JobSpec) -> Section {
    let mut r = x.check_axioms(job.parallel);
    if cyclic {
        if let Some(n) = x.first_non_cyclic_degree() {
            r.fail("t^{n+1} = id", format!("degree {n}"));
        }
    }
    let mut s = Section::with_report(format!("axioms of {}", x.name), r);
    s.line(format!("dims {}", join_dims(&x.dims)));
    s.data = json!({ "dims": x.dims, "cyclic": x.is_cyclic() });
    s
}

/// Para-cyclic identities of a cover. Its structure maps need only be
/// H-linear modulo `J`, so failures of H-linearity are listed, not counted.
fn cover_axioms<F: Field>(t: &ParaCyclicModule<F>, job: &JobSpec) -> Section {
    let mut bare = t.clone();
    bare.h_action = None;
    let mut s = axioms(&bare, false, job);
    let full = t.check_axioms(job.parallel);
    let linear = full.failures.iter().filter(|f| f.identity.ends_with("is H-linear")).count();
    s.line(if linear == 0 {
        "structure maps are H-linear".to_string()
    } else {
        format!("structure maps are H-linear only modulo J ({linear} failures on the cover)")
    });
    s.data["h_linear_failures"] = json!(linear);
    s
}

struct Tower<F: Field> {
    tower: HopfCyclicTower<F>,
    full: ParaCyclicModule<F>,
}

/// With `--certify`, `full` carries one degree more than the tower so the
/// buffer can grow.
fn tower<F: Field>(full: ParaCyclicModule<F>, job: &JobSpec) -> Result<Tower<F>> {
    let tower = HopfCyclicTower::build(full.truncated(job.degree + job.buffer), job.degree, job.parallel)?;
    Ok(Tower { tower, full })
}

fn cover_top(job: &JobSpec) -> usize {
    job.degree + job.buffer + usize::from(job.certify)
}

fn algebra_tower<F: Field>(a: &ModuleAlgebra<F>, m: &ModComodule<F>, job: &JobSpec) -> Result<Tower<F>> {
    tower(cover_algebra(a, m, job.degree, cover_top(job))?, job)
}

fn coalgebra_tower<F: Field>(c: &ModuleCoalgebra<F>, m: &ModComodule<F>, job: &JobSpec) -> Result<Tower<F>> {
    tower(cover_coalgebra(c, m, job.degree, cover_top(job))?, job)
}

/// `T`, `J`, `Q`, `C` dimensions with the buffer certificate.
fn tower_sections<F: Field>(t: &Tower<F>, sayd: bool, job: &JobSpec) -> Vec<Section> {
    let tw = &t.tower;
    let mut out = vec![cover_axioms(&tw.cover, job), axioms(&tw.q, sayd, job), axioms(&tw.c, sayd, job)];
    let direct = direct_coinvariant_dims(&tw.cover).unwrap_or_default();
    let mut s = Section::new(format!("tower over {}", tw.cover.name));
    let stab = job.certify.then(|| j_stability(&t.full, job.degree, &[job.buffer, job.buffer + 1], job.parallel));
    if let Some(stab) = &stab {
        s.report.require(stab.is_stable(), "J unchanged when the buffer grows", || {
            format!("buffer {}: {:?}, buffer {}: {:?}", job.buffer, stab.dims[0], job.buffer + 1, stab.dims[1])
        });
    }
    if sayd {
        for n in 0..=job.degree {
            s.report.require(direct.get(n) == Some(&tw.c.dims[n]), "dim C_n = dim k ⊗_H T_n", || {
                format!("degree {n}: {} vs {:?}", tw.c.dims[n], direct.get(n))
            });
        }
    }
    let rows: Vec<Vec<String>> = (0..=job.degree)
        .map(|n| {
            vec![
                n.to_string(),
                tw.cover.dims[n].to_string(),
                tw.j[n].dim().to_string(),
                tw.q.dims[n].to_string(),
                tw.c.dims[n].to_string(),
                direct.get(n).map(|d| d.to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    s.text = table(&["n", "T", "J", "Q", "C", "k⊗_H T"], &rows);
    match &stab {
        Some(stab) => {
            s.line(format!("J dims with buffer {}: {}", job.buffer, join_dims(&stab.dims[0])));
            s.line(format!("J dims with buffer {}: {}", job.buffer + 1, join_dims(&stab.dims[1])));
        }
        None => s.line(format!("J saturated through degree {}; pass --certify to compare buffer {}", job.degree + job.buffer, job.buffer + 1)),
    }
    let para = (1..=job.degree.min(tw.cover.top())).find(|&n| !tw.cover.cyclic[n].pow(n + 1).is_identity());
    s.line(match para {
        Some(n) => format!("cover is para-cyclic: t^{} ≠ id in degree {n}", n + 1),
        None => "cover is cyclic in the reported range".to_string(),
    });
    s.data = json!({
        "T": tw.cover.dims, "J": tw.j.iter().map(|x| x.dim()).collect::<Vec<_>>(), "Q": tw.q.dims, "C": tw.c.dims,
        "coinvariants": direct, "certificate": stab, "first_para_cyclic_degree": para,
    });
    out.push(s);
    out
}

fn hypotheses_section<F: Field>(m: &ModComodule<F>) -> (Section, bool) {
    let r = check_sayd(m);
    let sayd = r.is_empty();
    let mut s = Section::new("coefficients");
    s.line(format!("dim {}; SAYD: {}", m.dim, if sayd { "yes" } else { "no" }));
    for f in &r.failures {
        s.line(format!("not SAYD: {} ({})", f.identity, f.location));
    }
    s.data = json!({ "sayd": sayd });
    (s, sayd)
}

/// Every structure check and module axiom for one document.
pub fn check_document<F: Field>(doc: &Document<F>, job: &JobSpec) -> Result<Vec<Section>> {
    let structure = doc.structure.check();
    let bad = !structure.is_empty();
    let mut out = vec![Section::with_report(format!("structure of {} ({})", doc.name, doc.structure.kind()), structure)];
    if bad {
        return Ok(out);
    }
    let n = job.degree;
    match &doc.structure {
        Structure::Hopf(h) => {
            out.push(axioms(&cyc_algebra(&h.algebra, n, n), true, job));
            out.push(axioms(&cyc_coalgebra(&h.coalgebra, n, n), true, job));
            out.push(axioms(&cyclic_dual(&cyc_algebra(&h.algebra, n, n)), true, job));
            let mut s = Section::new("modular pairs");
            let pairs = fixtures::modular_pair_candidates(h);
            for (p, ok) in &pairs {
                let v = |x: &[F]| x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
                s.line(format!("σ = [{}], δ = [{}]: {}", v(&p.sigma), v(&p.delta), if *ok { "SAYD" } else { "not SAYD" }));
            }
            out.push(s);
        }
        Structure::ModuleAlgebra(a) => {
            let m = coefficients(job, &a.hopf)?;
            let (s, sayd) = hypotheses_section(&m);
            out.push(s);
            out.push(axioms(&cyc_algebra(&a.algebra, n, n), true, job));
            out.extend(tower_sections(&algebra_tower(a, &m, job)?, sayd, job));
        }
        Structure::ComoduleAlgebra(b) => {
            let m = coefficients(job, &b.hopf)?;
            let (s, sayd) = hypotheses_section(&m);
            out.push(s);
            let cb = hopf_cocyclic_comodule_algebra(b, &m, n, n)?;
            out.push(axioms(&cb.module, sayd, job));
            out.push(axioms(&cyclic_dual(&cb.module), sayd, job));
        }
        Structure::ComoduleCoalgebra(z) => {
            let m = coefficients(job, &z.hopf)?;
            let (s, sayd) = hypotheses_section(&m);
            out.push(s);
            let cz = hopf_cyclic_comodule_coalgebra(z, &m, n, n)?;
            out.push(axioms(&cz.module, sayd, job));
            out.push(axioms(&cyclic_dual(&cz.module), sayd, job));
        }
        Structure::ModComodule(m) => {
            let (s, sayd) = hypotheses_section(m);
            out.push(s);
            let c = ModuleCoalgebra::regular(m.hopf.clone());
            out.extend(tower_sections(&coalgebra_tower(&c, m, job)?, sayd, job));
        }
        Structure::Pairing(p) => {
            let m = coefficients(job, &p.alg.hopf)?;
            let (s, _) = hypotheses_section(&m);
            out.push(s);
            let tc = coalgebra_tower(&p.coalg, &m, job)?;
            let ta = algebra_tower(&p.alg, &m, job)?;
            let al = alpha(p, &tc.tower, &ta.tower)?;
            let mut s = Section::with_report("alpha", al.report());
            s.line(format!("levels T, Q, C checked through degree {}", al.coinvariant.target.top()));
            out.push(s);
        }
        Structure::Trace { alg, m, tau } => {
            let ta = HopfCyclicTower::build(cover_algebra(alg, m, 1, 1 + job.buffer)?, 1, job.parallel)?;
            let t = InvariantTrace { alg: alg.clone(), m: m.clone(), tau: tau.clone() };
            let mut s = Section::with_report("trace", t.check(&ta));
            s.report.merge(t.check_modular_identities());
            let printed = t.check_identities();
            s.line(if printed.is_empty() {
                "τ(h(a)) = ε(h)τ(a) and τ(h(a)a') = τ(a S(h_(1))(a') δ(h_(2))) hold".to_string()
            } else {
                format!("ε-form identities fail in {} cases; the δ-twisted forms are the ones checked", printed.failures.len())
            });
            out.push(s);
        }
    }
    Ok(out)
}

pub fn check<F: Field>(job: &JobSpec) -> Result<Vec<Section>> {
    let mut out = Vec::new();
    let docs: Vec<Document<F>> = if job.inputs.is_empty() && job.controls.is_empty() {
        fixtures::library::<F>()
    } else {
        job.inputs
            .iter()
            .map(|p| {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                parse_unchecked::<F>(&text).map_err(|e| anyhow!("{}: {e}", p.display()))
            })
            .collect::<Result<_>>()?
    };
    for d in &docs {
        out.extend(check_document(d, job)?);
    }
    for c in &job.controls {
        out.push(control::<F>(*c, job)?);
    }
    Ok(out)
}

fn control<F: Field>(c: Control, job: &JobSpec) -> Result<Section> {
    Ok(match c {
        Control::CorruptedAntipode => {
            Section::with_report("control: corrupted antipode on kZ/2", fixtures::broken_antipode::<F>().check_structure())
        }
        Control::CorruptedB => {
            let x = cyc_algebra(&fixtures::dual_numbers::<F>(), job.degree, job.degree);
            let mut m = mixed_of_cyclic(&x)?;
            // B_n += (e0 ↦ e_t) with b_{n+1} e_t ≠ 0 breaks bB + Bb = 0 in degree n
            let (n, target) = (0..m.top())
                .find_map(|n| m.b[n + 1].columns().iter().position(|c| !c.is_empty()).map(|t| (n, t)))
                .ok_or_else(|| anyhow!("b vanishes identically"))?;
            let bump = Matrix::from_fn(m.dims[n + 1], m.dims[n], |c| if c == 0 { vec![(target, F::one())] } else { vec![] });
            m.big_b[n] = m.big_b[n].add(&bump);
            let mut s = Section::with_report("control: corrupted B on Cyc(k[x]/x^2)", m.check());
            s.line(format!("B_{n} perturbed by e0 ↦ e{target}"));
            s
        }
        Control::DroppedFactor => {
            let a = fixtures::dual_numbers_sign::<F>();
            let m = ModComodule::trivial(a.hopf.clone());
            let top = job.degree.min(2);
            let r = diag_tensor_epi_check(&a, &a, &m, &m, top, 1, Reshuffle::DropFactor, job.parallel)?;
            let mut s = Section::with_report("control: reshuffling with a dropped factor", r);
            s.line(format!("degrees 0..={top}"));
            s
        }
    })
}

/// The modules whose cohomology a document determines.
fn modules_of<F: Field>(doc: &Document<F>, job: &JobSpec) -> Result<Vec<ParaCyclicModule<F>>> {
    let n = job.degree;
    Ok(match &doc.structure {
        Structure::Hopf(h) => vec![cyc_algebra(&h.algebra, n, n)],
        Structure::ModuleAlgebra(a) => {
            let m = coefficients(job, &a.hopf)?;
            vec![cyc_algebra(&a.algebra, n, n), algebra_tower(a, &m, job)?.tower.c]
        }
        Structure::ComoduleAlgebra(b) => vec![hopf_cocyclic_comodule_algebra(b, &coefficients(job, &b.hopf)?, n, n)?.module],
        Structure::ComoduleCoalgebra(z) => vec![hopf_cyclic_comodule_coalgebra(z, &coefficients(job, &z.hopf)?, n, n)?.module],
        Structure::ModComodule(m) => vec![coalgebra_tower(&ModuleCoalgebra::regular(m.hopf.clone()), m, job)?.tower.c],
        Structure::Pairing(p) => {
            let m = coefficients(job, &p.alg.hopf)?;
            vec![coalgebra_tower(&p.coalg, &m, job)?.tower.c, algebra_tower(&p.alg, &m, job)?.tower.c]
        }
        Structure::Trace { alg, m, .. } => vec![algebra_tower(alg, m, job)?.tower.c],
    })
}

fn cohomology_sections<F: Field>(job: &JobSpec, compare_only: bool) -> Result<Vec<Section>> {
    let mut out = Vec::new();
    for path in &job.inputs {
        let doc = load::<F>(path)?;
        for x in modules_of(&doc, job)? {
            if let Some(d) = x.first_non_cyclic_degree() {
                let mut s = Section::new(format!("cohomology of {}", x.name));
                s.report.fail("module is cyclic", format!("degree {d}"));
                out.push(s);
                continue;
            }
            let tables: Vec<CohomologyTable> =
                job.model.models().into_iter().map(|m| cohomology_table(&x, m, job.parallel)).collect::<hopfcyc::Result<_>>()?;
            let mut s = Section::new(format!("cohomology of {}", x.name));
            if tables.len() == 2 {
                s.report = compare_tables(&tables[0], &tables[1]);
            } else if compare_only {
                bail!("compare needs --model both");
            }
            let rows: Vec<Vec<String>> = (0..tables[0].degrees.len())
                .map(|n| {
                    let mut r = vec![n.to_string()];
                    r.extend(tables.iter().map(|t| t.degrees[n].to_string()));
                    r.push(if tables[0].is_stable(n) { "stable".into() } else { "truncation-affected".into() });
                    r
                })
                .collect();
            let mut header = vec!["n".to_string()];
            header.extend(tables.iter().map(|t| t.model.to_string()));
            header.push("range".into());
            let header: Vec<&str> = header.iter().map(|h| h.as_str()).collect();
            s.text = table(&header, &rows);
            s.data = json!({ "tables": tables });
            out.push(s);
        }
    }
    Ok(out)
}

pub fn cohomology<F: Field>(job: &JobSpec) -> Result<Vec<Section>> {
    cohomology_sections::<F>(job, false)
}

pub fn compare<F: Field>(job: &JobSpec) -> Result<Vec<Section>> {
    cohomology_sections::<F>(job, true)
}

fn kinds<F: Field>(job: &JobSpec) -> Result<Vec<Document<F>>> {
    job.inputs.iter().map(|p| load::<F>(p)).collect()
}

/// Pairing and trace documents, in either order.
fn pairing_and_trace<F: Field>(docs: &[Document<F>]) -> Option<(&EquivariantPairing<F>, (&ModuleAlgebra<F>, &ModComodule<F>, &Vec<F>))> {
    let p = docs.iter().find_map(|d| if let Structure::Pairing(p) = &d.structure { Some(p) } else { None })?;
    let t = docs.iter().find_map(|d| if let Structure::Trace { alg, m, tau } = &d.structure { Some((alg, m, tau)) } else { None })?;
    Some((p, t))
}

struct TracePair<F: Field> {
    p: EquivariantPairing<F>,
    tc: HopfCyclicTower<F>,
    ta: HopfCyclicTower<F>,
    alpha: Alpha<F>,
    trace: InvariantTrace<F>,
}

fn trace_setup<F: Field>(docs: &[Document<F>], job: &JobSpec) -> Result<TracePair<F>> {
    let (p, (alg, m, tau)) = pairing_and_trace(docs).ok_or_else(|| anyhow!("expected a pairing and a trace document"))?;
    if *alg != p.alg {
        bail!("the trace is on a different module algebra than the pairing");
    }
    let tc = coalgebra_tower(&p.coalg, m, job)?.tower;
    let ta = algebra_tower(&p.alg, m, job)?.tower;
    let trace = InvariantTrace::new(alg, m, tau.clone(), &ta)?;
    let alpha = alpha(p, &tc, &ta)?;
    Ok(TracePair { p: p.clone(), tc, ta, alpha, trace })
}

fn stable_top(job: &JobSpec) -> usize {
    job.degree.saturating_sub(2)
}

pub fn char_map<F: Field>(job: &JobSpec) -> Result<Vec<Section>> {
    let docs = kinds::<F>(job)?;
    let s = trace_setup(&docs, job)?;
    let mut head = Section::with_report("alpha", s.alpha.report());
    head.line(format!("C(C,M) dims {}", join_dims(&s.tc.c.dims)));
    head.line(format!("C(A,M) dims {}", join_dims(&s.ta.c.dims)));
    let mut out = vec![head];
    for deg in 0..=stable_top(job) {
        for (k, v) in cyclic_cocycles(&s.tc.c, deg)?.into_iter().enumerate() {
            for model in job.model.models() {
                let class = CochainClass::new(&s.tc.c, model, deg, v.clone())?;
                let mut sec = Section::new(format!("gamma of class {k} in degree {deg} ({model})"));
                match cm_char_map(&s.trace, &s.p, &s.alpha, &s.tc, &s.ta, &class) {
                    Ok(cm) => {
                        sec.line(format!("input  {}", show(&class.representative)));
                        sec.line(format!("output {}", show(&cm.direct.representative)));
                        sec.line("direct formula and pullback agree");
                        sec.data = json!({ "input": rep(&class.representative), "gamma": rep(&cm.direct.representative) });
                    }
                    Err(e) => sec.report.fail("direct formula equals pullback", e.to_string()),
                }
                out.push(sec);
            }
        }
    }
    Ok(out)
}

pub fn pair<F: Field>(job: &JobSpec) -> Result<Vec<Section>> {
    let docs = kinds::<F>(job)?;
    let find_m = || -> Option<&ModComodule<F>> {
        docs.iter().find_map(|d| if let Structure::ModComodule(m) = &d.structure { Some(m) } else { None })
    };
    let module_algebra = docs.iter().find_map(|d| if let Structure::ModuleAlgebra(a) = &d.structure { Some(a) } else { None });
    let comodule_algebra = docs.iter().find_map(|d| if let Structure::ComoduleAlgebra(b) = &d.structure { Some(b) } else { None });
    let comodule_coalgebra =
        docs.iter().find_map(|d| if let Structure::ComoduleCoalgebra(z) = &d.structure { Some(z) } else { None });
    let n = job.degree;
    let mut out = Vec::new();
    if pairing_and_trace(&docs).is_some() {
        let s = trace_setup(&docs, job)?;
        out.push(Section::with_report("alpha", s.alpha.report()));
        for deg in 0..=stable_top(job) {
            for v in cyclic_cocycles(&s.tc.c, deg)? {
                for model in job.model.models() {
                    let class = CochainClass::new(&s.tc.c, model, deg, v.clone())?;
                    let mut sec = Section::new(format!("cup with trace, degree {deg} ({model})"));
                    match cup_with_trace(&s.alpha, &s.tc, &s.ta, &class, &s.trace) {
                        Ok(c) => {
                            sec.line(format!("{} ↦ {}", show(&class.representative), show(&c.representative)));
                            sec.data = json!({ "input": rep(&class.representative), "output": rep(&c.representative) });
                        }
                        Err(e) => sec.report.fail("cup with trace is a cocycle", e.to_string()),
                    }
                    out.push(sec);
                }
            }
        }
    } else if let (Some(a), Some(b)) = (module_algebra, comodule_algebra) {
        let m = find_m().cloned().unwrap_or_else(|| default_coefficients(&a.hopf));
        let cb = hopf_cocyclic_comodule_algebra(b, &m, n, n)?;
        let ta = algebra_tower(a, &m, job)?.tower;
        let be = beta(a, b, &m, &cb, &ta)?;
        out.push(Section::with_report("beta", be.report.clone()));
        let traces = InvariantTrace::solve(a, &m, &ta);
        for (t, trace) in traces.iter().enumerate() {
            for deg in 0..=stable_top(job).min(be.source.top().saturating_sub(1)) {
                for v in cyclic_cocycles(&cb.module, deg)? {
                    let class = CochainClass::new(&cb.module, hopfcyc::homology::Model::Bicomplex, deg, v)?;
                    let mut sec = Section::new(format!("crossed cup with trace {t}, degree {deg}"));
                    match crossed_cup_with_trace(&be, &cb.module, &ta, &class, trace) {
                        Ok(c) => sec.line(format!("{} ↦ {}", show(&class.representative), show(&c.representative))),
                        Err(e) => sec.report.fail("crossed cup is a cocycle", e.to_string()),
                    }
                    out.push(sec);
                }
            }
        }
    } else if let Some(z) = comodule_coalgebra {
        let m = find_m().cloned().unwrap_or_else(|| default_coefficients(&z.hopf));
        let c = ModuleCoalgebra::regular(z.hopf.clone());
        let cz = hopf_cyclic_comodule_coalgebra(z, &m, n, n)?;
        let tc = coalgebra_tower(&c, &m, job)?.tower;
        let form = match job.xi_form {
            XiChoice::Printed => XiForm::Twisted,
            XiChoice::Shifted => XiForm::Shifted,
        };
        let x = xi(z, &c, &m, &cz, &tc, form)?;
        let mut head = Section::with_report(format!("xi ({form:?})"), x.report.clone());
        if form == XiForm::Twisted {
            let other = xi(z, &c, &m, &cz, &tc, XiForm::Coefficient)?;
            head.report.require(other.morphism.maps == x.morphism.maps, "both printed forms agree", || "as matrices".into());
        }
        out.push(head);
        if x.is_lawful() {
            let points = CyclicCohomology::new(&cyclic_dual(&cz.module), Model::Bicomplex)?.group(0)?;
            for (k, y) in points.representatives.iter().enumerate() {
                for deg in 0..=stable_top(job).min(x.source.top().saturating_sub(1)) {
                    for v in cyclic_cocycles(&x.source, deg)? {
                        let class = CochainClass::new(&x.source, Model::Bicomplex, deg, v)?;
                        let mut sec = Section::new(format!("pairing with point {k}, degree {deg}"));
                        match crossed_cup_with_point(&x, &cz.module, &tc, y, &class) {
                            Ok(c) => sec.line(format!("{} ↦ {}", show(&class.representative), show(&c.representative))),
                            Err(e) => sec.report.fail("pairing is a cocycle", e.to_string()),
                        }
                        out.push(sec);
                    }
                }
            }
        }
    } else {
        bail!("pair expects: pairing + trace; module-algebra + comodule-algebra [+ modcomodule]; or comodule-coalgebra [+ modcomodule]");
    }
    Ok(out)
}

pub fn build<F: Field>(job: &JobSpec) -> Result<Vec<Section>> {
    let mut out = Vec::new();
    for path in &job.inputs {
        let doc = load::<F>(path)?;
        match &doc.structure {
            Structure::ModuleAlgebra(a) => {
                let m = coefficients(job, &a.hopf)?;
                let (s, sayd) = hypotheses_section(&m);
                out.push(s);
                out.extend(tower_sections(&algebra_tower(a, &m, job)?, sayd, job));
            }
            Structure::Hopf(h) => {
                let m = coefficients(job, h)?;
                let (s, sayd) = hypotheses_section(&m);
                out.push(s);
                out.extend(tower_sections(&coalgebra_tower(&ModuleCoalgebra::regular(h.clone()), &m, job)?, sayd, job));
            }
            Structure::ModComodule(m) => {
                let (s, sayd) = hypotheses_section(m);
                out.push(s);
                out.extend(tower_sections(&coalgebra_tower(&ModuleCoalgebra::regular(m.hopf.clone()), m, job)?, sayd, job));
            }
            Structure::Pairing(p) => {
                let m = coefficients(job, &p.alg.hopf)?;
                let (s, sayd) = hypotheses_section(&m);
                out.push(s);
                out.extend(tower_sections(&coalgebra_tower(&p.coalg, &m, job)?, sayd, job));
                out.extend(tower_sections(&algebra_tower(&p.alg, &m, job)?, sayd, job));
            }
            Structure::ComoduleAlgebra(b) => {
                let cb = hopf_cocyclic_comodule_algebra(b, &coefficients(job, &b.hopf)?, job.degree, job.degree)?;
                out.push(axioms(&cb.module, true, job));
            }
            Structure::ComoduleCoalgebra(z) => {
                let cz = hopf_cyclic_comodule_coalgebra(z, &coefficients(job, &z.hopf)?, job.degree, job.degree)?;
                out.push(axioms(&cz.module, true, job));
            }
            Structure::Trace { alg, m, .. } => {
                let (s, sayd) = hypotheses_section(m);
                out.push(s);
                out.extend(tower_sections(&algebra_tower(alg, m, job)?, sayd, job));
            }
        }
    }
    Ok(out)
}

/// Writes the fixture library under `dir` and `dir/controls`.
pub fn write_fixtures<F: Field>(dir: &std::path::Path) -> Result<Vec<Section>> {
    let mut s = Section::new(format!("fixtures in {}", dir.display()));
    for (sub, docs) in [(dir.to_path_buf(), fixtures::library::<F>()), (dir.join("controls"), fixtures::controls::<F>())] {
        std::fs::create_dir_all(&sub)?;
        for d in docs {
            let path = sub.join(format!("{}.json", d.name));
            std::fs::write(&path, write(&d)?)?;
            s.line(format!("{:<22} {}", d.structure.kind(), path.display()));
        }
    }
    Ok(vec![s])
}
