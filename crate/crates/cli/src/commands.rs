//! One function per subcommand; each returns certificates, report data and optional DOT.

use hopf_galois::builders::{
    figure_pairs, group_algebra, mono, paper_example, reduced_can, GroupTable, FIGURE, FIGURE_COVERS,
};
use hopf_galois::corings::{
    close_right_coideal_subalgebra, congruence_submonoid_bridges, coring_can, field_ext_galois_check,
    map_coring, module_algebra_connection, MonoActionCert,
};
use hopf_galois::extensions::{
    can_full, can_full_on, can_q, can_s, coextension_can, coinvariants, extension_connection, q_certificate,
    s_certificate, CanReport, ComoduleAlgebra, ModuleAlgebra, ModuleCoalgebra, RelativeTensor,
};
use hopf_galois::hopf::{find_group_likes, is_group_like, verify_structure, AlgebraStr, HopfAlgebra, Structure, StructureReport};
use hopf_galois::lattice::FinitePoset;
use hopf_galois::linalg::sparse;
use hopf_galois::subobjects::{
    close_coideal_subalgebra, group_subobjects, h_coinvariants, k_plus_h, takeuchi_check, CoidealSubalgebra,
    GeneralizedQuotient, RightIdealCoideal,
};
use hopf_galois::{Error, Result, SVec, Subspace};
use serde_json::{json, Value};

use crate::input::{GroupOrigin, Subject};
use crate::report::Certificate;

pub struct Outcome {
    pub certificates: Vec<Certificate>,
    pub data: Value,
    pub dot: Option<String>,
}

fn svec_json(v: &SVec) -> Value {
    Value::Array(v.iter().map(|(i, c)| json!([i, c.to_string()])).collect())
}

fn can_json(c: &CanReport) -> Value {
    serde_json::to_value(c).expect("CanReport serializes")
}

fn can_witness(c: &CanReport) -> Value {
    let defect = match (c.injective, c.surjective) {
        (false, false) => "neither injective nor surjective",
        (false, true) => "not injective",
        _ => "not surjective",
    };
    json!({"domain_dim": c.domain_dim, "codomain_dim": c.codomain_dim, "rank": c.rank, "defect": defect})
}

fn poset_json(p: &FinitePoset) -> Value {
    json!({"elements": p.elements, "covers": p.covers()})
}

fn structure_entry(name: &str, r: &StructureReport) -> (Value, Certificate) {
    let violations: Vec<Value> = r.violations.iter().map(|v| json!({"axiom": v.axiom, "witness": v.witness})).collect();
    let cert = Certificate::check(format!("{name} axioms"), r.ok, || Value::Array(violations.clone()));
    (json!({"name": name, "ok": r.ok, "violations": violations}), cert)
}

pub fn verify(s: &Subject) -> Result<Outcome> {
    let mut reports: Vec<(&str, StructureReport)> = Vec::new();
    match s {
        Subject::Algebra(a) => reports.push(("algebra", verify_structure(Structure::Algebra(a))?)),
        Subject::Coalgebra(c) => reports.push(("coalgebra", verify_structure(Structure::Coalgebra(c))?)),
        Subject::Bialgebra(b) => reports.push(("bialgebra", verify_structure(Structure::Bialgebra(b))?)),
        _ => {
            let h = s.hopf().expect("remaining subjects carry a Hopf algebra");
            reports.push(("hopf", verify_structure(Structure::Hopf(h))?));
            if let Ok(m) = s.module() {
                reports.push(("module algebra", verify_structure(Structure::Algebra(&m.alg))?));
            } else if !matches!(s, Subject::Hopf { .. }) {
                reports.push(("comodule algebra", verify_structure(Structure::Algebra(&s.comodule()?.alg))?));
            }
        }
    }
    let (entries, certificates): (Vec<Value>, Vec<Certificate>) = reports.iter().map(|(n, r)| structure_entry(n, r)).unzip();
    Ok(Outcome { certificates, data: json!({"kind": s.kind(), "structures": entries}), dot: None })
}

pub fn group_likes(s: &Subject) -> Result<Outcome> {
    let c = match s {
        Subject::Coalgebra(c) => c,
        Subject::Bialgebra(b) => &b.coalg,
        _ => s.hopf().ok_or_else(|| Error::Input(format!("{} has no coalgebra", s.kind())))?.coalg(),
    };
    let gs = find_group_likes(c)?;
    let bad = gs.iter().position(|g| !is_group_like(c, g));
    let elements: Vec<Value> = gs.iter().map(|g| svec_json(&sparse::from_dense(g))).collect();
    let cert = Certificate::check("group-likes satisfy Δg = g⊗g, ε(g) = 1", bad.is_none(), || json!({"element": bad}));
    Ok(Outcome { certificates: vec![cert], data: json!({"count": gs.len(), "elements": elements}), dot: None })
}

/// Coideal subalgebras and generalized quotients offered to the correspondence commands.
pub struct Candidates {
    pub labels: Vec<String>,
    pub subs: Vec<CoidealSubalgebra>,
    pub quots: Vec<GeneralizedQuotient>,
}

pub fn candidates(h: &HopfAlgebra, origin: Option<&GroupOrigin>) -> Result<Candidates> {
    let f = h.field();
    if let Some(o) = origin {
        let gs = group_subobjects(&o.group, f)?;
        let ideals = if o.dual { &gs.dual_ideals } else { &gs.group_algebra_ideals };
        let quots = ideals
            .iter()
            .map(|i| GeneralizedQuotient::new(h, RightIdealCoideal::new(h, i.clone())?))
            .collect::<Result<Vec<_>>>()?;
        let subs = if o.dual {
            quots.iter().map(|q| h_coinvariants(h, q)).collect::<Result<Vec<_>>>()?
        } else {
            gs.subgroups
                .iter()
                .map(|g0| CoidealSubalgebra::new(h, Subspace::span_sparse(f, h.dim(), &g0.iter().map(|&g| sparse::unit(g, f)).collect::<Vec<_>>())))
                .collect::<Result<Vec<_>>>()?
        };
        return Ok(Candidates { labels: gs.labels, subs, quots });
    }
    let mut labels = Vec::new();
    let mut subs: Vec<CoidealSubalgebra> = Vec::new();
    let seeds = std::iter::once((String::from("k1"), vec![])).chain((0..h.dim()).map(|i| (format!("⟨e{i}⟩"), vec![sparse::unit(i, f)])));
    for (label, seed) in seeds.chain(std::iter::once((String::from("H"), (0..h.dim()).map(|i| sparse::unit(i, f)).collect()))) {
        let k = close_coideal_subalgebra(h, &Subspace::span_sparse(f, h.dim(), &seed))?;
        if !subs.iter().any(|x| x.space == k.space) {
            labels.push(label);
            subs.push(k);
        }
    }
    let quots = subs.iter().map(|k| k_plus_h(h, k)).collect::<Result<Vec<_>>>()?;
    Ok(Candidates { labels, subs, quots })
}

fn hopf_of(s: &Subject) -> Result<&HopfAlgebra> {
    s.hopf().ok_or_else(|| Error::Input(format!("{} has no Hopf algebra", s.kind())))
}

pub fn takeuchi(s: &Subject) -> Result<Outcome> {
    let h = hopf_of(s)?;
    let c = candidates(h, s.origin().as_ref())?;
    let r = takeuchi_check(h, &c.subs, &c.quots)?;
    let trips = r.sub_round_trips.iter().filter(|x| **x).count();
    let cert = Certificate::check("ψφ = id and φψ = id", r.ok(), || json!(r.failures));
    let data = json!({
        "labels": c.labels,
        "round_trips": trips,
        "sub_round_trips": r.sub_round_trips,
        "quot_round_trips": r.quot_round_trips,
        "freeness": r.freeness,
        "failures": r.failures,
    });
    Ok(Outcome { certificates: vec![cert], data, dot: None })
}

fn comodule_candidates(s: &Subject, a: &ComoduleAlgebra) -> Result<Candidates> {
    candidates(&a.hopf, s.origin().as_ref())
}

pub fn connection(s: &Subject) -> Result<Outcome> {
    let a = s.comodule()?;
    let c = comodule_candidates(s, &a)?;
    let conn = extension_connection(&a, vec![], c.quots.clone())?;
    let failures = conn.conn.law_failures();
    let mut certificates = vec![Certificate::check("Galois connection laws", failures.is_empty(), || json!(failures))];
    let quots: Vec<Value> = conn
        .quots
        .iter()
        .enumerate()
        .map(|(i, q)| json!({"label": c.labels.get(i).cloned().unwrap_or_else(|| format!("Q{i}")), "dim": q.dim(), "phi": conn.conn.phi[i]}))
        .collect();
    let subs: Vec<Value> = conn.subs.iter().enumerate().map(|(i, x)| json!({"label": format!("S{i}"), "dim": x.dim(), "psi": conn.conn.psi[i]})).collect();
    let mut data = json!({
        "quotients": quots,
        "subalgebras": subs,
        "closed_quotients": conn.closed_quots,
        "closed_subalgebras": conn.closed_subs,
        "quotient_poset": poset_json(&conn.conn.p),
        "subalgebra_poset": poset_json(&conn.conn.q),
    });
    let mut dot = conn.conn.p.export_dot("quotients") + &conn.conn.q.export_dot("subalgebras");
    if let Ok(m) = s.module() {
        let ks: Vec<Subspace> = (0..m.hopf.dim())
            .map(|i| close_right_coideal_subalgebra(&m.hopf, &Subspace::span_sparse(m.field(), m.hopf.dim(), &[sparse::unit(i, m.field())])))
            .collect();
        let mc = module_algebra_connection(m, vec![], ks)?;
        let failures = mc.conn.law_failures();
        certificates.push(Certificate::check("module connection laws", failures.is_empty(), || json!(failures)));
        data["module_connection"] = json!({
            "coideal_dims": mc.ks.iter().map(Subspace::dim).collect::<Vec<_>>(),
            "subalgebra_dims": mc.subs.iter().map(Subspace::dim).collect::<Vec<_>>(),
            "phi": mc.conn.phi,
            "psi": mc.conn.psi,
            "closed_coideals": mc.closed_ks,
            "closed_subalgebras": mc.closed_subs,
        });
        dot += &mc.conn.p.export_dot("coideal_subalgebras");
    }
    Ok(Outcome { certificates, data, dot: Some(dot) })
}

fn can_entry(label: &str, c: &CanReport) -> (Value, Certificate) {
    (
        json!({"label": label, "bijective": c.bijective, "can": can_json(c)}),
        Certificate::check(format!("can bijective: {label}"), c.bijective, || can_witness(c)),
    )
}

fn mono_or_domain_failure(e: Error) -> Result<Outcome> {
    let name = match &e {
        Error::NotMonoAction(_) => "acts through monomorphisms",
        Error::ZeroDivisor(_) => "A is a domain",
        _ => return Err(e),
    };
    Ok(Outcome { certificates: vec![Certificate::fail(name, json!(e.to_string()))], data: json!({"target": "coring", "results": []}), dot: None })
}

fn paper_full(p: &hopf_galois::builders::PaperExample) -> Result<CanReport> {
    let a = p.module.to_comodule()?;
    let t = RelativeTensor::with_basis(&a.alg, &Subspace::full(a.field(), a.dim()), &p.b, p.relative_basis.clone())?;
    can_full_on(&a, &t)
}

fn reduced_entry(p: &hopf_galois::builders::PaperExample, label: &str) -> Result<(Value, Certificate)> {
    let r = reduced_can(p)?;
    let cert = Certificate::check(format!("det M ≠ 0: {label}"), r.bijective, || json!({"det_plus": r.det_plus, "det_minus": r.det_minus}));
    Ok((json!({"label": label, "method": "reduced", "bijective": r.bijective, "det_plus": r.det_plus, "det_minus": r.det_minus}), cert))
}

pub fn can(s: &Subject, target: &str, full: bool) -> Result<Outcome> {
    let mut results = Vec::new();
    let mut certificates = Vec::new();
    let mut push = |(v, c): (Value, Certificate)| {
        results.push(v);
        certificates.push(c);
    };
    match target {
        "full" => match s {
            Subject::Paper(p) if !full => push(reduced_entry(p, "A⊗_B A → A⊗H*")?),
            Subject::Paper(p) => push(can_entry("A⊗_B A → A⊗H*", &paper_full(p)?)),
            _ => {
                let a = s.comodule()?;
                let b = coinvariants(&a, None)?;
                push(can_entry("A⊗_B A → A⊗H", &can_full(&a, &b)?));
            }
        },
        "Q" | "S" => {
            let a = s.comodule()?;
            let c = comodule_candidates(s, &a)?;
            for (label, q) in c.labels.iter().zip(&c.quots) {
                if target == "Q" {
                    push(can_entry(label, &can_q(&a, q)?));
                } else {
                    let sub = coinvariants(&a, Some(q))?;
                    push(can_entry(&format!("A^co({label})"), &can_s(&a, &sub)?));
                }
            }
        }
        "coring" => match s {
            Subject::Paper(p) => push(reduced_entry(p, "A⊗_B A → Hom(H, A)")?),
            _ => {
                let m = s.module()?;
                let cert = match MonoActionCert::standard(m) {
                    Ok(c) => c,
                    Err(e) => return mono_or_domain_failure(e),
                };
                let cc = match coring_can(m, &cert) {
                    Ok(c) => c,
                    Err(e) => return mono_or_domain_failure(e),
                };
                push(can_entry("A⊗_{A^H} A → Hom(H, A)", &cc.can));
                certificates.push(Certificate::check("can is a coring morphism", cc.coring_morphism, || json!({"can": can_json(&cc.can)})));
                if let Subject::FieldExt(e) = s {
                    let k = map_coring(&e.group, &e.module)?;
                    let g = field_ext_galois_check(&e.module)?;
                    results.push(json!({"label": "E⊗_F E → Map(G, E)", "bijective": g.bijective, "can": can_json(&g), "map_coring_dim": k.dim}));
                    certificates.push(Certificate::check("can bijective: E⊗_F E → Map(G, E)", g.bijective, || can_witness(&g)));
                }
            }
        },
        "coext" => {
            let h = hopf_of(s)?;
            let c = candidates(h, s.origin().as_ref())?;
            let mc = ModuleCoalgebra::regular(h);
            for (label, k) in c.labels.iter().zip(&c.subs) {
                push(can_entry(label, &coextension_can(&mc, k)?));
            }
        }
        other => return Err(Error::Input(format!("unknown can target '{other}'"))),
    }
    Ok(Outcome { certificates, data: json!({"target": target, "results": results}), dot: None })
}

pub fn lattice(s: &Subject) -> Result<Outcome> {
    if let Subject::Paper(p) = s {
        return figure_lattice(p).map(|(cert, lattice, pairs)| {
            let dot = lattice_dot(&lattice);
            Outcome { certificates: vec![cert], data: json!({"lattice": lattice, "pairs": pairs}), dot: Some(dot) }
        });
    }
    let h = hopf_of(s)?;
    if let Some(o) = s.origin() {
        let g = group_subobjects(&o.group, h.field())?;
        let (name, ok) = if o.dual {
            ("Quot_gen(k[G]*) ≅ Sub(G)", g.dual_isomorphic)
        } else {
            ("Quot_gen(k[G]) anti-isomorphic to Sub(G)", g.group_algebra_anti_isomorphic)
        };
        let cert = Certificate::check(name, ok, || json!({"subgroups": g.labels}));
        let quot = if o.dual { &g.dual_poset } else { &g.group_algebra_poset };
        let data = json!({"lattice": poset_json(&g.subgroup_poset), "quotients": poset_json(quot), "subgroups": g.subgroups});
        let dot = g.subgroup_poset.export_dot("subgroups") + &quot.export_dot("quotients");
        return Ok(Outcome { certificates: vec![cert], data, dot: Some(dot) });
    }
    let c = candidates(h, None)?;
    let poset = FinitePoset::from_fn(c.labels.clone(), |x, y| c.subs[y].space.contains(&c.subs[x].space))?;
    let dims: Vec<usize> = c.subs.iter().map(CoidealSubalgebra::dim).collect();
    let data = json!({"lattice": poset_json(&poset), "dims": dims});
    Ok(Outcome { certificates: vec![], data, dot: Some(poset.export_dot("coideal_subalgebras")) })
}

fn lattice_dot(v: &Value) -> String {
    let elements: Vec<String> = serde_json::from_value(v["elements"].clone()).unwrap_or_default();
    let covers: Vec<(usize, usize)> = serde_json::from_value(v["covers"].clone()).unwrap_or_default();
    let n = elements.len();
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in &covers {
        leq[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    FinitePoset::new(elements, leq).map(|p| p.export_dot("figure")).unwrap_or_default()
}

/// The figure's eight pairs, their inclusions and the `K ↦ A^K` check.
fn figure_lattice(p: &hopf_galois::builders::PaperExample) -> Result<(Certificate, Value, Vec<Value>)> {
    let pairs = figure_pairs(p)?;
    let mut bad = Vec::new();
    let mut out = Vec::new();
    for (i, (k, sub)) in pairs.iter().enumerate() {
        let inv = p.module.invariants(&k.space);
        if inv != *sub {
            bad.push(i);
        }
        out.push(json!({"coideal": FIGURE[i].0, "coideal_dim": k.dim(), "subalgebra": FIGURE[i].2, "subalgebra_dim": sub.dim(), "invariants_dim": inv.dim()}));
    }
    let labels: Vec<String> = FIGURE.iter().map(|x| x.2.to_string()).collect();
    let poset = FinitePoset::from_fn(labels, |x, y| pairs[y].1.contains(&pairs[x].1))?;
    let mut covers = poset.covers();
    covers.sort_unstable();
    let mut expected = FIGURE_COVERS.to_vec();
    expected.sort_unstable();
    if covers != expected {
        bad.push(usize::MAX);
    }
    let cert = Certificate::check("A^K equals the figure's subalgebras", bad.is_empty(), || json!({"pairs": bad}));
    Ok((cert, poset_json(&poset), out))
}

pub fn closed(s: &Subject) -> Result<Outcome> {
    let a = s.comodule()?;
    let c = comodule_candidates(s, &a)?;
    let mut certificates = Vec::new();
    let mut quots = Vec::new();
    let mut subs = Vec::new();
    for (label, q) in c.labels.iter().zip(&c.quots) {
        let qc = q_certificate(&a, q)?;
        quots.push(json!({
            "label": label,
            "closed": qc.closed,
            "galois": qc.q_galois,
            "a_galois": qc.a_galois,
            "delta_tensor_injective": qc.delta_tensor_injective,
            "galois_implies_closed": qc.galois_implies_closed,
        }));
        certificates.push(Certificate::check(format!("Q Galois ⇒ closed: {label}"), qc.galois_implies_closed != Some(false), || json!({"quotient": label, "closed": qc.closed, "galois": qc.q_galois})));
        let sub = coinvariants(&a, Some(q))?;
        let sc = s_certificate(&a, &sub)?;
        let sl = format!("A^co({label})");
        subs.push(json!({"label": sl, "dim": sub.dim(), "closed": sc.closed, "can": can_json(&sc.can_s), "agrees": sc.agrees}));
        certificates.push(Certificate::check(format!("can_S bijective ⇔ closed: {sl}"), sc.agrees != Some(false), || json!({"subalgebra": sl, "closed": sc.closed, "can": can_json(&sc.can_s)})));
    }
    Ok(Outcome { certificates, data: json!({"quotients": quots, "subalgebras": subs}), dot: None })
}

pub fn bridge(s: &Subject) -> Result<Outcome> {
    let (g, m): (GroupTable, ModuleAlgebra) = match s {
        Subject::FieldExt(e) => (e.group.clone(), e.module.clone()),
        Subject::Hopf { origin: Some(o), hopf } if !o.dual => {
            let f = hopf.field();
            let k = AlgebraStr::from_fn(f, 1, sparse::unit(0, f), |_, _| sparse::unit(0, f));
            let action = vec![sparse::unit(0, f); o.group.order];
            (o.group.clone(), ModuleAlgebra::new(k, group_algebra(&o.group, f), action)?)
        }
        Subject::Module(m) => {
            let g = (1..=m.hopf.dim())
                .filter_map(|n| GroupTable::by_name(&format!("Z{n}")).ok())
                .find(|g| group_algebra(g, m.field()) == m.hopf)
                .ok_or_else(|| Error::Input("bridge needs a group algebra acting on E".into()))?;
            (g, m.clone())
        }
        _ => return Err(Error::Input("bridge needs a finite field extension or a group algebra".into())),
    };
    let r = congruence_submonoid_bridges(&g, &m)?;
    let sm = &r.submonoids;
    let cg = &r.congruences;
    let certificates = vec![
        Certificate::check("θξ = id", sm.theta_xi_id, || json!({"submonoids": sm.submonoids})),
        Certificate::check("ξθ ≥ id", sm.xi_theta_ge, || json!({"submonoids": sm.submonoids})),
        Certificate::check("ξ(G₀) is a coideal", sm.coideals, || json!({"submonoids": sm.submonoids})),
        Certificate::check("θ_{C_θ} = θ", cg.theta_round_trip, || json!({"congruences": cg.congruences})),
        Certificate::check("C ⊆ C_{θ_C}", cg.c_le_closure, || json!({"congruences": cg.congruences})),
    ];
    let dot = format!("{}{}", sm.dot, cg.dot);
    Ok(Outcome { certificates, data: serde_json::to_value(&r).expect("BridgeReport serializes"), dot: Some(dot) })
}

pub fn example_circle(full: bool) -> Result<Outcome> {
    let p = paper_example()?;
    let f = p.module.field();
    let gens: Vec<SVec> = (0..4).flat_map(|b| (0..4).map(move |k| (b, 4 * k))).map(|(b, c)| sparse::unit(mono(0, b, c), f)).collect();
    let oracle = Subspace::span_sparse(f, p.module.dim(), &gens);
    let b = p.module.invariants(&Subspace::full(f, p.module.hopf.dim()));
    let mut certificates = vec![Certificate::check("A^H = ⟨X, Z⁴⟩", b == oracle && b.dim() == 16, || json!({"dim": b.dim()}))];
    let r = reduced_can(&p)?;
    certificates.push(Certificate::check("det M ≠ 0", r.bijective, || json!({"det_plus": r.det_plus, "det_minus": r.det_minus})));
    let (cert, lattice, pairs) = figure_lattice(&p)?;
    certificates.push(cert);
    let mut data = json!({
        "a_dim": p.module.dim(),
        "h_dim": p.module.hopf.dim(),
        "b_dim": b.dim(),
        "b_basis": p.b.sparse_vectors().iter().map(svec_json).collect::<Vec<_>>(),
        "reduced": serde_json::to_value(&r).expect("ReducedCan serializes"),
        "lattice": lattice,
        "pairs": pairs,
    });
    if full {
        let c = paper_full(&p)?;
        certificates.push(Certificate::check("can bijective on the 1024-dim presentation", c.bijective, || can_witness(&c)));
        data["full"] = can_json(&c);
    }
    let dot = lattice_dot(&data["lattice"]);
    Ok(Outcome { certificates, data, dot: Some(dot) })
}
