//! Command dispatch: every command resolves its names, runs the library
//! checks, and returns a report plus command-specific details.

use std::sync::Arc;

use catcenter::adjoint::{check_adjunction, find_adjoint, is_autonomous, lift_dual_to_center, Handedness};
use catcenter::bilax::{
    bilax1_to_bimnd_cell, bilax_to_bimonad, bimnd_cell_to_bilax, bimnd_cell_to_dist, bimnd_to_dist,
    check_bilax_consequences, check_bilax_functor, check_bilax_transformation, check_dist_cell, check_dist_object,
    check_preservation, check_ybo1,
};
use catcenter::bimonad::{check_bimonad, check_lambda, check_yd_module, enumerate_yd_modules, make_lambda, Bimonad};
use catcenter::center::{check_half_braiding, enumerate_center, Strength, Twist};
use catcenter::fincat::validate_category;
use catcenter::moncat::{check_lax_monoidal, validate_moncat, LaxMonFunctor, MatBackend, Matrix, MonCat};
use catcenter::spec::{category_decl, Entry, SpecFile, Value, Workspace};
use catcenter::twocat::{Finite2Cat, Strict2Cat};
use catcenter::{Error, Report, Side};
use serde_json::{json, Value as Json};

/// What a command produced.
pub struct Outcome {
    pub report: Report,
    pub details: Json,
    /// Short lines for the human summary, besides the law list.
    pub summary: Vec<String>,
}

/// Names resolve in the given structure files first, then in the bundled
/// suite.
pub struct Scope {
    pub layers: Vec<Workspace>,
}

impl Scope {
    pub fn get(&self, name: &str) -> Result<&Entry, Error> {
        self.layers
            .iter()
            .find_map(|w| w.get(name))
            .ok_or_else(|| Error::Precondition(format!("unknown name `{name}`")))
    }

    fn moncat(&self, name: &str) -> Result<Arc<MonCat>, Error> {
        match &self.get(name)?.value {
            Value::MonCat(m) => Ok(m.clone()),
            v => Err(kind_error(name, "moncat", v)),
        }
    }

    fn functor(&self, name: &str) -> Result<Arc<LaxMonFunctor>, Error> {
        match &self.get(name)?.value {
            Value::Functor(f) => Ok(f.clone()),
            v => Err(kind_error(name, "functor", v)),
        }
    }

    fn bimonad(&self, name: &str) -> Result<(Arc<MatBackend>, Bimonad<MatBackend>), Error> {
        match &self.get(name)?.value {
            Value::Bimonad(k, b) => Ok((k.clone(), b.clone())),
            v => Err(kind_error(name, "bimonad", v)),
        }
    }
}

fn kind_error(name: &str, want: &str, v: &Value) -> Error {
    Error::KindMismatch(format!("`{name}` is a {}, not a {want}", v.kind()))
}

fn rows(m: &Matrix) -> Json {
    json!(m.to_rows())
}

fn plain(report: Report) -> Outcome {
    Outcome { report, details: Json::Null, summary: Vec::new() }
}

pub fn check(scope: &Scope, kind: &str, name: &str) -> Result<Outcome, Error> {
    let entry = scope.get(name)?;
    let report = match (kind, &entry.value) {
        ("category", Value::Category(c)) => validate_category(c)?,
        ("category", Value::MonCat(m)) => validate_category(m.base())?,
        ("moncat", Value::MonCat(m)) => {
            let mut r = validate_moncat(m)?;
            if let Some(y) = m.braiding_ybo() {
                r.absorb("braiding", check_ybo1(&y)?);
            }
            r
        }
        ("functor", Value::Functor(f)) => check_lax_monoidal(f)?,
        ("bimonad", Value::Bimonad(k, b)) => check_bimonad(&**k, b)?,
        ("lambda", Value::Bimonad(k, b)) => check_lambda(&**k, &make_lambda(&**k, b)?)?,
        ("yd", Value::Yd { over, module }) => {
            let (k, b) = scope.bimonad(over)?;
            check_yd_module(&*k, &b, module)?
        }
        ("bilax", Value::Bilax(f)) => {
            let mut r = check_bilax_functor(f)?;
            r.absorb("consequences", check_bilax_consequences(f)?);
            r.absorb("preservation", check_preservation(f, &[])?);
            r
        }
        ("bilax-transformation", Value::BilaxTransformation(x)) => check_bilax_transformation(x)?,
        ("category" | "moncat" | "functor" | "bimonad" | "lambda" | "yd" | "bilax" | "bilax-transformation", v) => {
            return Err(kind_error(name, kind, v))
        }
        _ => return Err(Error::Unsupported(format!("unknown kind `{kind}` for check"))),
    };
    Ok(plain(report))
}

pub struct CenterArgs<'a> {
    pub moncat: &'a str,
    pub side: Side,
    pub strength: Strength,
    pub twist: Option<(&'a str, &'a str)>,
    pub dualize: bool,
}

pub fn center(scope: &Scope, a: &CenterArgs<'_>) -> Result<Outcome, Error> {
    let m = scope.moncat(a.moncat)?;
    let (f, g) = match a.twist {
        Some((f, g)) => ((*scope.functor(f)?).clone(), (*scope.functor(g)?).clone()),
        None => (LaxMonFunctor::identity(m.clone()), LaxMonFunctor::identity(m.clone())),
    };
    if f.target != m || g.target != m {
        return Err(Error::KindMismatch(format!("the twisting functors must land in `{}`", a.moncat)));
    }
    let (k, tw) = Twist::regular(&f, &g)?;
    let z = enumerate_center(&tw, a.side, a.strength)?;
    let mut report = Report::new(format!("center of {}", a.moncat));
    let mut objects = Vec::new();
    for h in &z.objects {
        report.absorb("half-braiding", check_half_braiding(h)?);
        objects.push(json!({
            "carrier": k.show1(&h.carrier),
            "components": h.components.iter().map(|c| k.show2(c)).collect::<Vec<_>>(),
        }));
    }
    let mut summary = vec![format!("objects: {}", z.objects.len()), format!("morphisms: {}", z.morphisms.len())];
    for (i, o) in objects.iter().enumerate() {
        summary.push(format!("  [{i}] {} σ = {}", o["carrier"].as_str().unwrap_or(""), o["components"]));
    }
    let mut duals = Vec::new();
    if a.dualize {
        let autonomy = is_autonomous(&*k)?;
        for (i, h) in z.objects.iter().enumerate() {
            let Some(adj) = autonomy.right.get(&h.carrier) else {
                return Err(Error::Precondition(format!("{} has no right adjoint", k.show1(&h.carrier))));
            };
            let lift = lift_dual_to_center(h, adj)?;
            report.absorb("dual", lift.report);
            duals.push(json!({"of": i, "carrier": k.show1(&lift.dual.carrier)}));
        }
        summary.push(format!("duals: {}", duals.len()));
    }
    let spec = SpecFile { category: vec![category_decl("center", &z.category)], ..Default::default() }.to_toml()?;
    let details = json!({
        "side": format!("{:?}", a.side).to_lowercase(),
        "strength": format!("{:?}", a.strength).to_lowercase(),
        "object_count": z.objects.len(),
        "morphism_count": z.morphisms.len(),
        "objects": objects,
        "duals": duals,
        "category_spec": spec,
    });
    Ok(Outcome { report, details, summary })
}

pub fn adjoints(scope: &Scope, name: &str) -> Result<Outcome, Error> {
    let m = scope.moncat(name)?;
    let k = catcenter::twocat::deloop_moncat(&m);
    let mut report = Report::new(format!("adjunctions in the delooping of {name}"));
    let mut cells = Vec::new();
    let mut summary = Vec::new();
    for f in k.all_one_cells() {
        let mut entry = json!({"cell": k.show1(&f)});
        for (h, key) in [(Handedness::Left, "left"), (Handedness::Right, "right")] {
            let found = find_adjoint(&k, &f, h)?;
            for adj in &found {
                report.absorb("adjunction", check_adjunction(&k, adj));
            }
            let us: Vec<String> = found.iter().map(|a| k.show1(&a.u)).collect();
            summary.push(format!("{} {key} adjoints: [{}]", k.show1(&f), us.join(", ")));
            entry[key] = json!(us);
        }
        cells.push(entry);
    }
    let autonomy = is_autonomous(&k)?;
    let witness =
        autonomy.witness.as_ref().map(|(c, h)| json!({"cell": k.show1(c), "missing": format!("{h:?}").to_lowercase()}));
    summary.push(format!("autonomous: {}", autonomy.autonomous()));
    Ok(Outcome {
        report,
        details: json!({"cells": cells, "autonomous": autonomy.autonomous(), "witness": witness}),
        summary,
    })
}

pub fn enumerate(scope: &Scope, what: &str, name: &str, max_dim: usize) -> Result<Outcome, Error> {
    if what != "yd" {
        return Err(Error::Unsupported(format!("cannot enumerate `{what}`")));
    }
    let (k, b) = scope.bimonad(name)?;
    let found = enumerate_yd_modules(&k, &b, max_dim)?;
    let mut report = Report::new(format!("Yetter-Drinfel'd modules over {name} up to dimension {max_dim}"));
    let mut list = Vec::new();
    for v in &found {
        report.absorb("yd", check_yd_module(&*k, &b, v)?);
        list.push(json!({"carrier": v.carrier, "action": rows(&v.action), "coaction": rows(&v.coaction)}));
    }
    Ok(Outcome {
        report,
        summary: vec![format!("structures: {}", found.len())],
        details: json!({"count": found.len(), "modules": list}),
    })
}

pub fn map_to_dist(scope: &Scope, name: &str) -> Result<Outcome, Error> {
    let k = MatBackend::new(2)?;
    let bimonad_image = |k: &MatBackend, b: &Bimonad<MatBackend>| -> Result<Outcome, Error> {
        let l = bimnd_to_dist(k, b)?;
        let report = check_dist_object(k, &l)?;
        Ok(Outcome { report, details: json!({"lambda": rows(&l.cell)}), summary: vec!["0-cell".into()] })
    };
    match &scope.get(name)?.value {
        Value::Bimonad(k, b) => bimonad_image(k, b),
        Value::Bilax(f) => {
            let b = bilax_to_bimonad(f)?;
            let mut o = bimonad_image(&k, &b)?;
            o.report.absorb("bimonad", check_bimonad(&k, &b)?);
            Ok(o)
        }
        Value::BilaxTransformation(x) => {
            let cell = bilax1_to_bimnd_cell(x)?;
            let d = bimnd_cell_to_dist(&k, &cell)?;
            let mut report = check_dist_cell(&k, &d)?;
            let back = bimnd_cell_to_bilax(Arc::new(k), (), &cell)?;
            report.check("round-trip", back == **x, || "Bimnd cell back to a bilax transformation".into());
            Ok(Outcome {
                report,
                details: json!({"carrier": d.carrier, "psi": rows(&d.psi), "phi": rows(&d.phi), "lambda": rows(&d.source.cell)}),
                summary: vec!["1-cell".into()],
            })
        }
        v => Err(Error::KindMismatch(format!(
            "`{name}` is a {}; map-to-dist takes a bimonad, bilax or bilax_transformation",
            v.kind()
        ))),
    }
}
