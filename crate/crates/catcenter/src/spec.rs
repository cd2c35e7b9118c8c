//! Structure files: a TOML workspace of named categories, monoidal
//! categories, strict monoidal functors, bialgebras in the matrix backend,
//! Yetter-Drinfel'd modules, and the bilax data built from them.
//!
//! ```toml
//! [[moncat]]
//! name = "z2"
//! elements = ["0", "1"]
//! table = [["0", "1"], ["1", "0"]]
//!
//! [[bimonad]]
//! name = "kz2"
//! group = "z2"
//! ```
//!
//! Declarations may reference names declared anywhere in the file, as long
//! as the kinds fit (a functor's source is a monoidal category, ...).

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::bilax::{bimonad_to_bilax, constant_bilax, yd_to_bilax, BilaxFunctor, BilaxTransformation};
use crate::bimonad::{Bimonad, YdModule};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, Morphism};
use crate::moncat::{group_moncat, LaxMonFunctor, MatBackend, Matrix, MonCat};
use crate::suite;
use crate::twocat::{deloop_moncat, TwoCat};

type Rows<T> = Vec<Vec<T>>;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub category: Vec<CategoryDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub moncat: Vec<MonCatDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functor: Vec<FunctorDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bimonad: Vec<BimonadDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub yd: Vec<YdDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bilax: Vec<BilaxDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bilax_transformation: Vec<BilaxTransformationDecl>,
}

/// `morphisms` are `[name, source, target]` in index order. When
/// `identities` is omitted, an identity `1_a` is put first for every object.
/// Compositions with an identity may be left out of `compose`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDecl {
    pub name: Spanned<String>,
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<String>>,
    /// `[g, f, g∘f]`.
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

/// Either `builtin`, or a monoid table (`elements`, `table`, optional
/// `symmetric` for the identity braiding of a commutative monoid), or a
/// full category with `tensor_obj`, `tensor_mor`, `unit` and an optional
/// `braiding`, all by name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonCatDecl {
    pub name: Spanned<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Rows<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compose: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor_obj: Option<Rows<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor_mor: Option<Rows<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Rows<String>>,
}

/// A strict monoidal functor, by its object (and morphism) images, or
/// conjugation by an element of a group. An endofunctor with neither is the
/// identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDecl {
    pub name: Spanned<String>,
    pub source: String,
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugation: Option<String>,
}

fn two() -> u32 {
    2
}

/// A bialgebra over `F_p` in the matrix backend: the group bialgebra of a
/// declared group, or explicit structure matrices (`c` defaults to the
/// swap).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimonadDecl {
    pub name: Spanned<String>,
    #[serde(default = "two")]
    pub p: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Rows<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Rows<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Rows<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Rows<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Rows<u32>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdDecl {
    pub name: Spanned<String>,
    pub over: String,
    pub action: Rows<u32>,
    pub coaction: Rows<u32>,
}

/// The bilax functor out of the trivial 2-category picking `bimonad`, or,
/// with `source`, the constant functor at `bimonad` on the delooping of a
/// braided monoidal category.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BilaxDecl {
    pub name: Spanned<String>,
    pub bimonad: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

/// The bilax transformation of a Yetter-Drinfel'd module; `j` defaults to
/// the identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BilaxTransformationDecl {
    pub name: Spanned<String>,
    pub yd: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Rows<u32>>,
}

/// A resolved declaration.
#[derive(Debug, Clone)]
pub enum Value {
    Category(Arc<FinCategory>),
    MonCat(Arc<MonCat>),
    Functor(Arc<LaxMonFunctor>),
    Bimonad(Arc<MatBackend>, Bimonad<MatBackend>),
    Yd { over: String, module: YdModule<MatBackend> },
    Bilax(Arc<BilaxFunctor<TwoCat, MatBackend>>),
    BilaxTransformation(Arc<BilaxTransformation<TwoCat, MatBackend>>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Category(_) => "category",
            Value::MonCat(_) => "moncat",
            Value::Functor(_) => "functor",
            Value::Bimonad(..) => "bimonad",
            Value::Yd { .. } => "yd",
            Value::Bilax(_) => "bilax",
            Value::BilaxTransformation(_) => "bilax_transformation",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    /// 1-based line of the declaration's `name`.
    pub line: usize,
    pub value: Value,
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub origin: String,
    pub entries: Vec<Entry>,
}

impl Workspace {
    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.name.as_str())
    }

    pub fn moncats(&self) -> impl Iterator<Item = (&str, &Arc<MonCat>)> {
        self.entries.iter().filter_map(|e| match &e.value {
            Value::MonCat(m) => Some((e.name.as_str(), m)),
            _ => None,
        })
    }
}

pub fn parse_spec(path: &Path) -> Result<Workspace> {
    parse_spec_in(path, None)
}

/// Parse a structure file whose references may also resolve in `prelude`
/// (names in the file shadow it).
pub fn parse_spec_in(path: &Path, prelude: Option<&Workspace>) -> Result<Workspace> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_spec_str_in(&text, &path.display().to_string(), prelude)
}

pub fn parse_spec_str(text: &str, origin: &str) -> Result<Workspace> {
    parse_spec_str_in(text, origin, None)
}

pub fn parse_spec_str_in(text: &str, origin: &str, prelude: Option<&Workspace>) -> Result<Workspace> {
    let file: SpecFile = toml::from_str(text).map_err(|e| Error::Spec {
        origin: origin.into(),
        line: e.span().map_or(0, |s| line_of(text, s.start)),
        message: e.message().to_string(),
    })?;
    Resolver { text, origin, prelude, ws: Workspace { origin: origin.into(), entries: Vec::new() } }.run(&file)
}

fn line_of(text: &str, offset: usize) -> usize {
    1 + text[..offset.min(text.len())].bytes().filter(|&b| b == b'\n').count()
}

struct Resolver<'a> {
    text: &'a str,
    origin: &'a str,
    prelude: Option<&'a Workspace>,
    ws: Workspace,
}

impl Resolver<'_> {
    fn err(&self, name: &Spanned<String>, message: impl Into<String>) -> Error {
        Error::Spec { origin: self.origin.into(), line: self.line(name), message: message.into() }
    }

    fn line(&self, name: &Spanned<String>) -> usize {
        let s = name.span();
        if s.end == 0 {
            0
        } else {
            line_of(self.text, s.start)
        }
    }

    fn lookup(&self, at: &Spanned<String>, name: &str, kind: &str) -> Result<&Value> {
        match self.ws.get(name).or_else(|| self.prelude.and_then(|p| p.get(name))) {
            Some(e) if e.value.kind() == kind => Ok(&e.value),
            Some(e) => Err(self.err(at, format!("`{name}` is a {}, not a {kind}", e.value.kind()))),
            None => Err(self.err(at, format!("unresolved name `{name}` (expected a {kind})"))),
        }
    }

    fn moncat(&self, at: &Spanned<String>, name: &str) -> Result<Arc<MonCat>> {
        match self.lookup(at, name, "moncat")? {
            Value::MonCat(m) => Ok(m.clone()),
            _ => unreachable!(),
        }
    }

    fn push(&mut self, name: &Spanned<String>, value: Result<Value>) -> Result<()> {
        let value = value.map_err(|e| match e {
            e @ Error::Spec { .. } => e,
            e => self.err(name, format!("`{}`: {e}", name.get_ref())),
        })?;
        if self.ws.get(name.get_ref()).is_some() {
            return Err(self.err(name, format!("duplicate name `{}`", name.get_ref())));
        }
        let line = self.line(name);
        self.ws.entries.push(Entry { name: name.get_ref().clone(), line, value });
        Ok(())
    }

    fn run(mut self, f: &SpecFile) -> Result<Workspace> {
        // names must be unique across kinds before anything resolves
        let mut seen = BTreeSet::new();
        let all = f
            .category
            .iter()
            .map(|d| &d.name)
            .chain(f.moncat.iter().map(|d| &d.name))
            .chain(f.functor.iter().map(|d| &d.name))
            .chain(f.bimonad.iter().map(|d| &d.name))
            .chain(f.yd.iter().map(|d| &d.name))
            .chain(f.bilax.iter().map(|d| &d.name))
            .chain(f.bilax_transformation.iter().map(|d| &d.name));
        for n in all {
            if !seen.insert(n.get_ref().clone()) {
                return Err(self.err(n, format!("duplicate name `{}`", n.get_ref())));
            }
        }
        for d in &f.category {
            let v = build_category(&d.objects, &d.morphisms, d.identities.as_deref(), &d.compose);
            self.push(&d.name, v.map(|c| Value::Category(Arc::new(c))))?;
        }
        for d in &f.moncat {
            let v = build_moncat(d).map(|m| Value::MonCat(Arc::new(m)));
            self.push(&d.name, v)?;
        }
        for d in &f.functor {
            let v = self.functor(d);
            self.push(&d.name, v)?;
        }
        for d in &f.bimonad {
            let v = self.bimonad(d);
            self.push(&d.name, v)?;
        }
        for d in &f.yd {
            let v = match self.lookup(&d.name, &d.over, "bimonad")? {
                Value::Bimonad(_, b) => yd_module(b, &d.action, &d.coaction),
                _ => unreachable!(),
            };
            let v = v.map(|module| Value::Yd { over: d.over.clone(), module });
            self.push(&d.name, v)?;
        }
        for d in &f.bilax {
            let v = self.bilax(d);
            self.push(&d.name, v)?;
        }
        for d in &f.bilax_transformation {
            let v = self.bilax_transformation(d);
            self.push(&d.name, v)?;
        }
        Ok(self.ws)
    }

    fn functor(&self, d: &FunctorDecl) -> Result<Value> {
        let (s, t) = (self.moncat(&d.name, &d.source)?, self.moncat(&d.name, &d.target)?);
        if let Some(by) = &d.conjugation {
            if d.source != d.target || d.objects.is_some() {
                return Err(self.err(&d.name, "conjugation is an endofunctor given by one element"));
            }
            let x = s.base().find_object(by).ok_or_else(|| self.err(&d.name, format!("unresolved name `{by}`")))?;
            if suite::group_inverse(&s, x).is_none() {
                return Err(self.err(&d.name, format!("`{by}` is not invertible")));
            }
            return Ok(Value::Functor(Arc::new(suite::conjugation(&s, x))));
        }
        let Some(objects) = d.objects.as_ref() else {
            // a bare endofunctor declaration is the identity
            if d.source != d.target {
                return Err(self.err(&d.name, "give `objects` or `conjugation`"));
            }
            return Ok(Value::Functor(Arc::new(LaxMonFunctor::identity(s))));
        };
        let (sb, tb) = (s.base(), t.base());
        let object_map = names_to_indices(objects, sb.n_objects(), |n| tb.find_object(n), "object")?;
        let morphism_map = match &d.morphisms {
            Some(ms) => names_to_indices(ms, sb.n_morphisms(), |n| tb.find_morphism(n), "morphism")?,
            None => (0..sb.n_morphisms())
                .map(|f| {
                    if sb.is_identity(f) {
                        Ok(tb.id(object_map[sb.src(f)]))
                    } else {
                        Err(Error::Malformed(
                            "`morphisms` is required when the source has non-identity morphisms".into(),
                        ))
                    }
                })
                .collect::<Result<_>>()?,
        };
        let f = Functor::new(sb.clone(), tb.clone(), object_map, morphism_map)?;
        Ok(Value::Functor(Arc::new(LaxMonFunctor::strict(s, t, f)?)))
    }

    fn bimonad(&self, d: &BimonadDecl) -> Result<Value> {
        if let Some(g) = &d.group {
            let m = self.moncat(&d.name, g)?;
            let (k, b) = suite::group_bialgebra(&m, d.p);
            return Ok(Value::Bimonad(Arc::new(k), b));
        }
        let k = MatBackend::new(d.p)?;
        let n = d.carrier.ok_or_else(|| self.err(&d.name, "give `group` or `carrier`"))?;
        let get = |m: &Option<Rows<u32>>, what: &str, rows: usize, cols: usize| -> Result<Matrix> {
            let m = m.as_ref().ok_or_else(|| self.err(&d.name, format!("missing `{what}`")))?;
            matrix(d.p, m, rows, cols, what)
        };
        let b = Bimonad {
            carrier: n,
            mu: get(&d.mu, "mu", n, n * n)?,
            eta: get(&d.eta, "eta", n, 1)?,
            delta: get(&d.delta, "delta", n * n, n)?,
            eps: get(&d.eps, "eps", 1, n)?,
            c: match &d.c {
                Some(c) => matrix(d.p, c, n * n, n * n, "c")?,
                None => k.swap(n, n),
            },
        };
        Ok(Value::Bimonad(Arc::new(k), b))
    }

    fn bilax(&self, d: &BilaxDecl) -> Result<Value> {
        let (k, b) = match self.lookup(&d.name, &d.bimonad, "bimonad")? {
            Value::Bimonad(k, b) => (k.clone(), b.clone()),
            _ => unreachable!(),
        };
        let mut f = match &d.source {
            None => bimonad_to_bilax(k, (), &b)?,
            Some(s) => {
                let m = self.moncat(&d.name, s)?;
                constant_bilax(Arc::new(braided_deloop(&m)?), k, (), &b)
            }
        };
        if let Some(func) = Arc::get_mut(&mut f.functor) {
            func.name = d.name.get_ref().clone();
        }
        Ok(Value::Bilax(Arc::new(f)))
    }

    fn bilax_transformation(&self, d: &BilaxTransformationDecl) -> Result<Value> {
        let (over, v) = match self.lookup(&d.name, &d.yd, "yd")? {
            Value::Yd { over, module } => (over.clone(), module.clone()),
            _ => unreachable!(),
        };
        let (k, b) = match self.lookup(&d.name, &over, "bimonad")? {
            Value::Bimonad(k, b) => (k.clone(), b.clone()),
            _ => unreachable!(),
        };
        let j = match &d.j {
            Some(j) => matrix(k.p(), j, b.carrier, b.carrier, "j")?,
            None => k.identity(b.carrier),
        };
        Ok(Value::BilaxTransformation(Arc::new(yd_to_bilax(k, &b, &b, &j, &v)?)))
    }
}

/// The delooping of a braided monoidal category with its braiding as the
/// Yang-Baxter cells of the single 0-cell.
pub fn braided_deloop(m: &Arc<MonCat>) -> Result<TwoCat> {
    let y = m.braiding_ybo().ok_or_else(|| Error::Precondition("the monoidal category has no braiding".into()))?;
    let n = m.n_objects();
    let table =
        (0..n * n).map(|i| if m.reversed() { y.components[i] } else { y.components[(i % n) * n + i / n] }).collect();
    deloop_moncat(m).with_ybo(0, table)
}

fn names_to_indices(
    names: &[String],
    expected: usize,
    find: impl Fn(&str) -> Option<usize>,
    what: &str,
) -> Result<Vec<usize>> {
    if names.len() != expected {
        return Err(Error::Malformed(format!("{} {what} images for {expected} {what}s", names.len())));
    }
    names.iter().map(|n| find(n).ok_or_else(|| Error::Malformed(format!("unresolved {what} `{n}`")))).collect()
}

fn matrix(p: u32, rows: &Rows<u32>, r: usize, c: usize, what: &str) -> Result<Matrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::Malformed(format!("`{what}` must be {r}x{c}")));
    }
    Matrix::from_rows(p, c, rows)
}

fn yd_module(b: &Bimonad<MatBackend>, action: &Rows<u32>, coaction: &Rows<u32>) -> Result<YdModule<MatBackend>> {
    let n = action.len();
    let d = b.carrier;
    let p = b.mu.p();
    Ok(YdModule {
        carrier: n,
        action: matrix(p, action, n, n * d, "action")?,
        coaction: matrix(p, coaction, n * d, n, "coaction")?,
    })
}

fn build_category(
    objects: &[String],
    morphisms: &[[String; 3]],
    identities: Option<&[String]>,
    compose: &[[String; 3]],
) -> Result<FinCategory> {
    if objects.is_empty() {
        return Err(Error::EmptyObjects);
    }
    let obj = |n: &str| {
        objects.iter().position(|o| o == n).ok_or_else(|| Error::Malformed(format!("unresolved object `{n}`")))
    };
    let mut mors = Vec::new();
    let ids: Vec<usize> = match identities {
        Some(ids) => {
            for [n, s, t] in morphisms {
                mors.push(Morphism { name: n.clone(), src: obj(s)?, tgt: obj(t)? });
            }
            let find = |n: &String| {
                mors.iter()
                    .position(|m| &m.name == n)
                    .ok_or_else(|| Error::Malformed(format!("unresolved identity `{n}`")))
            };
            ids.iter().map(find).collect::<Result<_>>()?
        }
        None => {
            for (a, o) in objects.iter().enumerate() {
                mors.push(Morphism { name: format!("1_{o}"), src: a, tgt: a });
            }
            for [n, s, t] in morphisms {
                mors.push(Morphism { name: n.clone(), src: obj(s)?, tgt: obj(t)? });
            }
            (0..objects.len()).collect()
        }
    };
    if ids.len() != objects.len() {
        return Err(Error::Malformed("one identity per object".into()));
    }
    let mut names = BTreeSet::new();
    for m in &mors {
        if !names.insert(m.name.as_str()) {
            return Err(Error::Malformed(format!("duplicate morphism `{}`", m.name)));
        }
    }
    let mor = |n: &str| {
        mors.iter().position(|m| m.name == n).ok_or_else(|| Error::Malformed(format!("unresolved morphism `{n}`")))
    };
    let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for [g, f, h] in compose {
        if table.insert((mor(g)?, mor(f)?), mor(h)?).is_some() {
            return Err(Error::Malformed(format!("duplicate compose entry for ({g}, {f})")));
        }
    }
    let is_id = |f: usize| ids.contains(&f);
    for (f, m) in mors.iter().enumerate() {
        for (g, n) in mors.iter().enumerate() {
            if m.tgt == n.src && !table.contains_key(&(g, f)) {
                if is_id(g) {
                    table.insert((g, f), f);
                } else if is_id(f) {
                    table.insert((g, f), g);
                }
            }
        }
    }
    let entries: Vec<(usize, usize, usize)> = table.into_iter().map(|((g, f), h)| (g, f, h)).collect();
    FinCategory::from_parts(objects.to_vec(), mors, ids, &entries)
}

fn build_moncat(d: &MonCatDecl) -> Result<MonCat> {
    if let Some(b) = &d.builtin {
        return builtin_moncat(b);
    }
    if let (Some(el), Some(table)) = (&d.elements, &d.table) {
        let idx = |n: &String| {
            el.iter().position(|e| e == n).ok_or_else(|| Error::Malformed(format!("unresolved element `{n}`")))
        };
        let t: Vec<Vec<usize>> =
            table.iter().map(|row| row.iter().map(idx).collect::<Result<_>>()).collect::<Result<_>>()?;
        let m = group_moncat(el, &t)?;
        return if d.symmetric == Some(true) { identity_braided(m) } else { Ok(m) };
    }
    let objects =
        d.objects.as_ref().ok_or_else(|| Error::Malformed("give `builtin`, `elements`/`table` or `objects`".into()))?;
    let base = build_category(
        objects,
        d.morphisms.as_deref().unwrap_or(&[]),
        d.identities.as_deref(),
        d.compose.as_deref().unwrap_or(&[]),
    )?;
    let grid = |rows: &Option<Rows<String>>, find: &dyn Fn(&str) -> Option<usize>, what: &str| -> Result<Vec<usize>> {
        let rows = rows.as_ref().ok_or_else(|| Error::Malformed(format!("missing `{what}`")))?;
        rows.iter()
            .flatten()
            .map(|n| find(n).ok_or_else(|| Error::Malformed(format!("unresolved name `{n}` in `{what}`"))))
            .collect()
    };
    let tensor_obj = grid(&d.tensor_obj, &|n| base.find_object(n), "tensor_obj")?;
    let tensor_mor = grid(&d.tensor_mor, &|n| base.find_morphism(n), "tensor_mor")?;
    let unit = d
        .unit
        .as_deref()
        .and_then(|u| base.find_object(u))
        .ok_or_else(|| Error::Malformed("missing or unresolved `unit`".into()))?;
    let braiding =
        d.braiding.as_ref().map(|_| grid(&d.braiding, &|n| base.find_morphism(n), "braiding")).transpose()?;
    let m = MonCat::new(Arc::new(base), tensor_obj, tensor_mor, unit)?;
    match braiding {
        Some(t) => m.with_braiding(t),
        None => Ok(m),
    }
}

fn identity_braided(m: MonCat) -> Result<MonCat> {
    let n = m.n_objects();
    let table = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            if m.tensor(x, y) == m.tensor(y, x) {
                Ok(m.base().id(m.tensor(x, y)))
            } else {
                Err(Error::Precondition("`symmetric` needs a commutative table".into()))
            }
        })
        .collect::<Result<_>>()?;
    m.with_braiding(table)
}

/// `z<n>`, `braided-z<n>`, `s3`, `d4`, `klein`, `poset-max`, `trivial`.
pub fn builtin_moncat(name: &str) -> Result<MonCat> {
    let cyclic_order = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1);
    Ok(match name {
        "s3" => suite::s3(),
        "d4" => suite::d4(),
        "klein" => suite::klein(),
        "poset-max" => suite::poset_max(),
        "trivial" => suite::trivial_moncat(),
        _ => {
            if let Some(n) = name.strip_prefix("braided-z").and_then(cyclic_order) {
                suite::braided_cyclic(n)
            } else if let Some(n) = name.strip_prefix('z').and_then(cyclic_order) {
                suite::cyclic(n)
            } else {
                return Err(Error::Malformed(format!("no builtin monoidal category `{name}`")));
            }
        }
    })
}

fn unspanned(name: &str) -> Spanned<String> {
    Spanned::new(0..0, name.to_string())
}

/// Objects, morphism triples, identities and composition triples.
type CategoryFields = (Vec<String>, Vec<[String; 3]>, Vec<String>, Vec<[String; 3]>);

fn category_fields(c: &FinCategory) -> CategoryFields {
    let objects = c.objects().to_vec();
    let morphisms =
        c.morphisms().iter().map(|m| [m.name.clone(), objects[m.src].clone(), objects[m.tgt].clone()]).collect();
    let identities = c.identities().iter().map(|&f| c.morphism_name(f).to_string()).collect();
    let compose = c
        .composable_pairs()
        .filter(|&(g, f)| !c.is_identity(g) && !c.is_identity(f))
        .map(|(g, f)| {
            let h = c.compose(g, f).expect("composable");
            [c.morphism_name(g).to_string(), c.morphism_name(f).to_string(), c.morphism_name(h).to_string()]
        })
        .collect();
    (objects, morphisms, identities, compose)
}

/// The canonical declaration of a category: every morphism and identity
/// listed, compositions with identities left implicit.
pub fn category_decl(name: &str, c: &FinCategory) -> CategoryDecl {
    let (objects, morphisms, identities, compose) = category_fields(c);
    CategoryDecl { name: unspanned(name), objects, morphisms, identities: Some(identities), compose }
}

/// The canonical full-form declaration of a monoidal category.
pub fn moncat_decl(name: &str, m: &MonCat) -> MonCatDecl {
    let b = m.base();
    let (objects, morphisms, identities, compose) = category_fields(b);
    let (n, k) = (b.n_objects(), b.n_morphisms());
    let on = |x: usize| b.object_name(x).to_string();
    let mn = |f: usize| b.morphism_name(f).to_string();
    MonCatDecl {
        name: unspanned(name),
        objects: Some(objects),
        morphisms: Some(morphisms),
        identities: Some(identities),
        compose: Some(compose),
        tensor_obj: Some((0..n).map(|x| (0..n).map(|y| on(m.tensor(x, y))).collect()).collect()),
        tensor_mor: Some((0..k).map(|f| (0..k).map(|g| mn(m.tensor_mor(f, g))).collect()).collect()),
        unit: Some(on(m.unit())),
        braiding: m.braiding().map(|t| t.chunks(n).map(|row| row.iter().map(|&f| mn(f)).collect()).collect()),
        builtin: None,
        elements: None,
        table: None,
        symmetric: None,
    }
}

pub fn bimonad_decl(name: &str, b: &Bimonad<MatBackend>) -> BimonadDecl {
    BimonadDecl {
        name: unspanned(name),
        p: b.mu.p(),
        group: None,
        carrier: Some(b.carrier),
        mu: Some(b.mu.to_rows()),
        eta: Some(b.eta.to_rows()),
        delta: Some(b.delta.to_rows()),
        eps: Some(b.eps.to_rows()),
        c: Some(b.c.to_rows()),
    }
}

pub fn yd_decl(name: &str, over: &str, v: &YdModule<MatBackend>) -> YdDecl {
    YdDecl { name: unspanned(name), over: over.into(), action: v.action.to_rows(), coaction: v.coaction.to_rows() }
}

impl SpecFile {
    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Internal(format!("serialising a structure file: {e}")))
    }
}

/// The bundled instances: `C(Z/2)` (braided), `C(Z/4)`, `C(S3)`, the
/// max-poset, `F₂[Z/2]`, `F₂[Z/2×Z/2]`, the two one-dimensional
/// Yetter-Drinfel'd modules over `F₂[Z/2]`, and the bilax data built from
/// them.
pub fn seed_suite() -> SpecFile {
    let mut f = SpecFile {
        moncat: vec![
            moncat_decl("z2", &suite::braided_cyclic(2)),
            moncat_decl("z4", &suite::cyclic(4)),
            moncat_decl("s3", &suite::s3()),
            moncat_decl("poset", &suite::poset_max()),
        ],
        bimonad: vec![bimonad_decl("kz2", &suite::kz2().1), bimonad_decl("kz2xz2", &suite::kz2xz2().1)],
        ..Default::default()
    };
    for (i, v) in suite::kz2_yd_dim1().iter().enumerate() {
        f.yd.push(yd_decl(&format!("yd{i}"), "kz2", v));
        f.bilax_transformation.push(BilaxTransformationDecl {
            name: unspanned(&format!("yd{i}-bilax")),
            yd: format!("yd{i}"),
            j: None,
        });
    }
    f.bilax = vec![
        BilaxDecl { name: unspanned("t-kz2"), bimonad: "kz2".into(), source: None },
        BilaxDecl { name: unspanned("t-kz2xz2"), bimonad: "kz2xz2".into(), source: None },
        BilaxDecl { name: unspanned("const-kz2"), bimonad: "kz2".into(), source: Some("z2".into()) },
    ];
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_is_an_empty_workspace() {
        assert!(parse_spec_str("", "empty").unwrap().is_empty());
    }

    #[test]
    fn bundled_s3() {
        let ws = parse_spec_str(include_str!("../specs/s3.spec"), "s3.spec").unwrap();
        assert_eq!(ws.entries.len(), 1);
        let (_, m) = ws.moncats().next().unwrap();
        assert_eq!(m.n_objects(), 6);
        assert_eq!(**m, suite::s3());
    }

    #[test]
    fn unresolved_functor_reports_its_line() {
        let text = "[[moncat]]\nname = \"z2\"\nbuiltin = \"z2\"\n\n[[functor]]\nname = \"f\"\nsource = \"z2\"\ntarget = \"z3\"\nobjects = [\"0\", \"1\"]\n";
        match parse_spec_str(text, "x").unwrap_err() {
            Error::Spec { line, message, .. } => {
                assert_eq!(line, 6);
                assert!(message.contains("unresolved name `z3`"), "{message}");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn syntax_errors_carry_a_line() {
        let e = parse_spec_str("[[moncat]]\nname = \n", "x").unwrap_err();
        assert!(matches!(e, Error::Spec { line: 2, .. }), "{e}");
        let e = parse_spec_str("[[moncat]]\nname = \"a\"\nbogus = 1\n", "x").unwrap_err();
        assert!(matches!(e, Error::Spec { .. }), "{e}");
    }

    #[test]
    fn references_fall_back_to_a_prelude() {
        let suite = parse_spec_str(&seed_suite().to_toml().unwrap(), "suite").unwrap();
        let text = "[[functor]]\nname = \"conj\"\nsource = \"s3\"\ntarget = \"s3\"\nconjugation = \"s\"\n";
        assert!(parse_spec_str(text, "x").is_err());
        let ws = parse_spec_str_in(text, "x", Some(&suite)).unwrap();
        assert_eq!(ws.entries.len(), 1);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let text = "[[moncat]]\nname = \"a\"\nbuiltin = \"z2\"\n[[bimonad]]\nname = \"a\"\ngroup = \"a\"\n";
        assert!(matches!(parse_spec_str(text, "x").unwrap_err(), Error::Spec { line: 5, .. }));
    }

    #[test]
    fn category_round_trip_is_exact() {
        for m in [suite::s3(), suite::poset_max(), suite::braided_cyclic(3)] {
            let f = SpecFile { moncat: vec![moncat_decl("m", &m)], ..Default::default() };
            let text = f.to_toml().unwrap();
            let ws = parse_spec_str(&text, "rt").unwrap();
            let (_, back) = ws.moncats().next().unwrap();
            assert_eq!(**back, m);
            let again = SpecFile { moncat: vec![moncat_decl("m", back)], ..Default::default() };
            assert_eq!(again.to_toml().unwrap(), text);
        }
        let c = suite::poset_max().base().as_ref().clone();
        let f = SpecFile { category: vec![category_decl("c", &c)], ..Default::default() };
        let text = f.to_toml().unwrap();
        match &parse_spec_str(&text, "rt").unwrap().entries[0].value {
            Value::Category(back) => assert_eq!(**back, c),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn seed_suite_parses_back() {
        let text = seed_suite().to_toml().unwrap();
        let ws = parse_spec_str(&text, "suite").unwrap();
        assert_eq!(ws.moncats().count(), 4);
        match &ws.get("kz2").unwrap().value {
            Value::Bimonad(_, b) => assert_eq!(*b, suite::kz2().1),
            v => panic!("{v:?}"),
        }
        assert!(matches!(ws.get("yd1-bilax").unwrap().value, Value::BilaxTransformation(_)));
        assert!(matches!(ws.get("const-kz2").unwrap().value, Value::Bilax(_)));
    }

    #[test]
    fn explicit_categories_and_functors() {
        let text = r#"
[[category]]
name = "arrow"
objects = ["a", "b"]
morphisms = [["f", "a", "b"]]

[[moncat]]
name = "z3"
builtin = "z3"

[[functor]]
name = "neg"
source = "z3"
target = "z3"
objects = ["e", "g2", "g"]

[[functor]]
name = "c"
source = "z3"
target = "z3"
conjugation = "g"
"#;
        let ws = parse_spec_str(text, "x").unwrap();
        match &ws.get("arrow").unwrap().value {
            Value::Category(c) => assert_eq!(c.n_morphisms(), 3),
            v => panic!("{v:?}"),
        }
        assert!(matches!(ws.get("neg").unwrap().value, Value::Functor(_)));
        assert_eq!(ws.get("c").unwrap().line, 18);
    }
}
