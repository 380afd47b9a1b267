//! The check suite: every structural result about the map spaces, evaluated
//! exactly on the catalog algebras.
//!
//! Each check has a stable id (`T2.1a`, `S3.4`, …) and reports `pass`, `fail`
//! or `skip` together with the dimensions it compared and, on failure, a
//! concrete counterexample. Checks run in parallel; records are always
//! returned in suite order, so reports are byte-for-byte reproducible.

use std::fmt::Write as _;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{peirce, satisfies_corner_condition, subalgebra_generated, Algebra, AlgebraElement, Idempotent};
use crate::catalog::{self, CatalogEntry, CatalogError};
use crate::centers::{self, CenterChain};
use crate::linalg::{solve_and_project, Field, Matrix, Subspace};
use crate::maps::{self, LinearMap, MapKind, MapSpace, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: &'static str,
    pub statement: &'static str,
    pub anchor: &'static str,
    pub status: Status,
    pub details: Vec<String>,
    /// First violated constraint, when the check failed on a concrete instance.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub field: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One row per check, then its details indented below it.
    pub fn to_table(&self) -> String {
        let id_width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let anchor_width = self.checks.iter().map(|c| c.anchor.chars().count()).max().unwrap_or(6).max(6);
        let mut out = String::new();
        let _ = writeln!(out, "field: {}", self.field);
        let _ = writeln!(out, "{:<id_width$}  {:<6}  {:<anchor_width$}  STATEMENT", "ID", "STATUS", "ANCHOR");
        for c in &self.checks {
            let _ = writeln!(out, "{:<id_width$}  {:<6}  {:<anchor_width$}  {}", c.id, c.status.as_str(), c.anchor, c.statement);
            for d in &c.details {
                let _ = writeln!(out, "    {d}");
            }
            if let Some(x) = &c.counterexample {
                let _ = writeln!(out, "    counterexample: {x}");
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let skipped = self.checks.len() - passed - failed;
        let _ = writeln!(out, "{passed} passed, {failed} failed, {skipped} skipped");
        out
    }
}

/// A catalog entry with its spaces and centers, each computed on first use.
pub struct Profile {
    pub entry: CatalogEntry,
    spaces: [OnceLock<MapSpace>; 8],
    chain: OnceLock<CenterChain>,
}

impl Profile {
    pub fn new(entry: CatalogEntry) -> Profile {
        Profile { entry, spaces: Default::default(), chain: OnceLock::new() }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.entry.algebra
    }

    pub fn name(&self) -> &str {
        self.entry.name()
    }

    pub fn space(&self, kind: MapKind) -> &MapSpace {
        let slot = MapKind::ALL.iter().position(|&k| k == kind).expect("kind is listed");
        self.spaces[slot].get_or_init(|| maps::space(self.algebra(), kind))
    }

    pub fn subspace(&self, kind: MapKind) -> &Subspace {
        self.space(kind).subspace()
    }

    pub fn chain(&self) -> &CenterChain {
        self.chain.get_or_init(|| centers::center_chain(self.algebra()).expect("center chain holds in any algebra"))
    }

    /// `Some(verdict)` in characteristic 0, `None` otherwise.
    pub fn semiprime(&self) -> Option<bool> {
        centers::is_semiprime_char0(self.algebra()).ok()
    }
}

/// The algebras the suite runs on.
pub struct Context {
    pub field: Field,
    pub profiles: Vec<Profile>,
}

impl Context {
    /// The standard catalog plus the one-dimensional algebra and `F ⊕ F`.
    pub fn new(field: Field) -> Result<Context, CatalogError> {
        let mut entries = catalog::standard(field)?;
        entries.push(catalog::by_name("F", field)?);
        entries.push(catalog::by_name("FxF", field)?);
        Ok(Context { field, profiles: entries.into_iter().map(Profile::new).collect() })
    }

    pub fn profile(&self, name: &str) -> Option<&Profile> {
        self.profiles.iter().find(|p| p.name() == name)
    }

    fn named(&self, name: &str) -> &Profile {
        self.profile(name).expect("context contains the standard catalog")
    }

    fn matrix_algebras(&self) -> impl Iterator<Item = &Profile> {
        self.profiles.iter().filter(|p| matches!(p.name(), "M2" | "M3"))
    }
}

pub struct Check {
    pub id: &'static str,
    pub statement: &'static str,
    pub anchor: &'static str,
    run: fn(&Context, &mut Outcome),
}

/// Accumulates details; any recorded failure makes the check fail.
#[derive(Default)]
struct Outcome {
    details: Vec<String>,
    failed: bool,
    skipped: bool,
    counterexample: Option<String>,
}

impl Outcome {
    fn detail(&mut self, text: String) {
        self.details.push(text);
    }

    fn expect(&mut self, ok: bool, text: String) {
        if ok {
            self.details.push(text);
        } else {
            self.failed = true;
            self.details.push(format!("FAILED: {text}"));
        }
    }

    fn counterexample(&mut self, text: String) {
        self.failed = true;
        if self.counterexample.is_none() {
            self.counterexample = Some(text);
        }
    }

    fn skip(&mut self, reason: &str) {
        self.skipped = true;
        self.details.push(format!("skipped: {reason}"));
    }
}

fn sum(a: &Subspace, b: &Subspace) -> Subspace {
    a.sum(b).expect("spaces of maps on one algebra")
}

fn intersect(a: &Subspace, b: &Subspace) -> Subspace {
    a.intersect(b).expect("spaces of maps on one algebra")
}

/// `{ α∘· : α ∈ s }` as a subspace of maps.
pub fn jordan_multiplications(algebra: &Algebra, s: &Subspace) -> Subspace {
    let vectors = s
        .basis()
        .iter()
        .map(|b| LinearMap::jordan_multiplication(algebra, &AlgebraElement::new(b.clone())).to_vec())
        .collect();
    Subspace::from_vectors(algebra.field(), algebra.dim() * algebra.dim(), vectors).expect("maps have n² coordinates")
}

/// `{ v ∈ s : T v ∈ w }`.
pub fn preimage_within(s: &Subspace, t: &Matrix, w: &Subspace) -> Subspace {
    let field = s.field();
    if s.is_zero() {
        return s.clone();
    }
    let images: Vec<Vec<_>> = s.basis().iter().map(|b| t.mul_vec(b).expect("operator fits the space")).collect();
    let cols = s.dim() + w.dim();
    let rows = (0..t.rows())
        .map(|r| {
            images
                .iter()
                .map(|img| img[r].clone())
                .chain(w.basis().iter().map(|b| -&b[r]))
                .collect()
        })
        .collect();
    let system = Matrix::from_rows(field, cols, rows).expect("rows have system width");
    let coefficients = solve_and_project(&system, 0..s.dim()).expect("block is in range");
    let vectors = coefficients.basis().iter().map(|c| s.combine(c)).collect();
    Subspace::from_vectors(field, s.ambient_dim(), vectors).expect("combinations live in the ambient space")
}

/// `f ↦ f(1)` on column-stacked maps.
fn evaluation_at_unit(algebra: &Algebra) -> Matrix {
    let n = algebra.dim();
    let field = algebra.field();
    let unit = algebra.unit();
    let mut m = Matrix::zeros(field, n, n * n);
    for (j, u) in unit.coords().iter().enumerate() {
        for i in 0..n {
            m.set(i, j * n + i, u.clone());
        }
    }
    m
}

fn compare(out: &mut Outcome, p: &Profile, left_name: &str, left: &Subspace, right_name: &str, right: &Subspace) {
    out.expect(
        left == right,
        format!("{}: {left_name} = {right_name} (dims {} and {})", p.name(), left.dim(), right.dim()),
    );
}

fn membership_certificate(out: &mut Outcome, algebra: &Algebra, kind: MapKind, f: &LinearMap) {
    match maps::first_violation(algebra, kind, f) {
        Ok(Some(v)) => out.detail(format!("not in {}: {}", kind.name(), v.describe(algebra))),
        Ok(None) => out.counterexample(format!("map unexpectedly satisfies the {} identity", kind.name())),
        Err(e) => out.counterexample(e.to_string()),
    }
}

fn t2_1a(ctx: &Context, out: &mut Outcome) {
    for p in &ctx.profiles {
        let expected = sum(p.subspace(MapKind::QJCent), p.subspace(MapKind::QJDer));
        compare(out, p, "GJDer", p.subspace(MapKind::GJDer), "QJCent + QJDer", &expected);
    }
}

fn t2_1b(ctx: &Context, out: &mut Outcome) {
    for p in &ctx.profiles {
        let expected = intersect(p.subspace(MapKind::QJCent), p.subspace(MapKind::QJDer));
        compare(out, p, "JCent", p.subspace(MapKind::JCent), "QJCent ∩ QJDer", &expected);
    }
}

fn semiprime_or_matrix<'a>(ctx: &'a Context, out: &mut Outcome) -> Vec<&'a Profile> {
    if ctx.field == Field::Rational {
        ctx.profiles.iter().filter(|p| p.semiprime() == Some(true)).collect()
    } else {
        out.detail("semiprimeness is decided only in characteristic 0; using the matrix algebras".into());
        ctx.matrix_algebras().collect()
    }
}

fn t2_3(ctx: &Context, out: &mut Outcome) {
    for p in semiprime_or_matrix(ctx, out) {
        let expected = sum(p.subspace(MapKind::Cent), p.subspace(MapKind::Der));
        compare(out, p, "GJDer", p.subspace(MapKind::GJDer), "Cent + Der", &expected);
    }
}

fn upper_corner_jordan_map(p: &Profile) -> LinearMap {
    let a = p.algebra();
    let corner = a.labels().iter().rev().find(|l| l.starts_with("e1")).expect("matrix-unit labels").clone();
    LinearMap::jordan_multiplication(a, &a.element(&corner))
}

fn ex2_t2(ctx: &Context, out: &mut Outcome) {
    let p = ctx.named("T2");
    let a = p.algebra();
    let f = upper_corner_jordan_map(p);
    out.expect(p.space(MapKind::QJCent).contains(&f), "T2: x ↦ e12∘x is a quasi Jordan centralizer".into());
    out.expect(!p.space(MapKind::JCent).contains(&f), "T2: x ↦ e12∘x is not a Jordan centralizer".into());
    membership_certificate(out, a, MapKind::JCent, &f);
    out.expect(
        !p.space(MapKind::FGDer).contains(&f),
        "T2: x ↦ e12∘x is not the h of any generalized Jordan derivation identity".into(),
    );
}

fn r2_2(ctx: &Context, out: &mut Outcome) {
    for name in ["T2", "T3"] {
        let p = ctx.named(name);
        let f = upper_corner_jordan_map(p);
        out.expect(
            p.subspace(MapKind::QJCent).dim() > p.subspace(MapKind::JCent).dim(),
            format!(
                "{name}: dim QJCent = {} > dim JCent = {}",
                p.subspace(MapKind::QJCent).dim(),
                p.subspace(MapKind::JCent).dim()
            ),
        );
        out.expect(
            p.space(MapKind::QJCent).contains(&f) && !p.space(MapKind::JCent).contains(&f),
            format!("{name}: Jordan multiplication by the corner unit separates them"),
        );
    }
}

fn t3_2a(ctx: &Context, out: &mut Outcome) {
    for p in &ctx.profiles {
        let a = p.algebra();
        compare(out, p, "QJCent", p.subspace(MapKind::QJCent), "{α∘· : α ∈ Z_Q}", &jordan_multiplications(a, &p.chain().z_q));
        for f in p.space(MapKind::QJCent).basis_maps() {
            match maps::extract_alpha(a, &f) {
                Ok(alpha) if p.chain().z_q.contains(alpha.coords()).expect("same ambient") => {}
                Ok(alpha) => out.counterexample(format!("{}: α = {} is not in Z_Q", p.name(), a.format(&alpha))),
                Err(e) => out.counterexample(format!("{}: {e}", p.name())),
            }
        }
    }
}

fn t3_2b(ctx: &Context, out: &mut Outcome) {
    for p in &ctx.profiles {
        let a = p.algebra();
        compare(out, p, "JCent", p.subspace(MapKind::JCent), "{α∘· : α ∈ Z_J}", &jordan_multiplications(a, &p.chain().z_j));
        compare(out, p, "Cent", p.subspace(MapKind::Cent), "{α∘· : α ∈ Z}", &jordan_multiplications(a, &p.chain().z));
    }
}

fn c3_3(ctx: &Context, out: &mut Outcome) {
    for p in &ctx.profiles {
        let c = p.chain();
        let mut applied = false;
        if c.z_j == c.z {
            applied = true;
            compare(out, p, "JCent", p.subspace(MapKind::JCent), "Cent", p.subspace(MapKind::Cent));
        }
        if c.z_q == c.z {
            applied = true;
            compare(out, p, "QJCent", p.subspace(MapKind::QJCent), "Cent", p.subspace(MapKind::Cent));
        }
        if c.z_q == c.z_j {
            applied = true;
            compare(out, p, "QJCent", p.subspace(MapKind::QJCent), "JCent", p.subspace(MapKind::JCent));
            compare(out, p, "GJDer", p.subspace(MapKind::GJDer), "QJDer", p.subspace(MapKind::QJDer));
        }
        if !applied {
            out.detail(format!("{}: Z ⊂ Z_J ⊂ Z_Q strictly, nothing to check", p.name()));
        }
    }
}

fn p3_4(ctx: &Context, out: &mut Outcome) {
    for p in ctx.matrix_algebras() {
        compare(out, p, "QJCent", p.subspace(MapKind::QJCent), "Cent", p.subspace(MapKind::Cent));
    }
}

fn p3_5(ctx: &Context, out: &mut Outcome) {
    if ctx.field != Field::Rational {
        return out.skip("semiprimeness is decided only in characteristic 0");
    }
    for p in &ctx.profiles {
        if p.semiprime() == Some(true) {
            compare(out, p, "QJCent", p.subspace(MapKind::QJCent), "Cent", p.subspace(MapKind::Cent));
        }
    }
}

/// Entries whose supplied idempotents are idempotent and generate the algebra.
fn idempotent_generated<'a>(ctx: &'a Context, out: &mut Outcome) -> Vec<&'a Profile> {
    let mut found = Vec::new();
    for p in &ctx.profiles {
        let Some(gens) = &p.entry.idempotent_generators else { continue };
        let a = p.algebra();
        let all_idempotent = gens.iter().all(|g| Idempotent::new(a, g.clone()).is_ok());
        let generated = subalgebra_generated(a, gens, true).map(|s| s.is_full()).unwrap_or(false);
        out.expect(all_idempotent && generated, format!("{}: generated by {} idempotents", p.name(), gens.len()));
        if all_idempotent && generated {
            found.push(p);
        }
    }
    found
}

fn p3_6(ctx: &Context, out: &mut Outcome) {
    for p in idempotent_generated(ctx, out) {
        compare(out, p, "Z_J", &p.chain().z_j, "Z", &p.chain().z);
        compare(out, p, "JCent", p.subspace(MapKind::JCent), "Cent", p.subspace(MapKind::Cent));
    }
}

/// Entries with a supplied nontrivial idempotent satisfying the corner condition.
fn corner_condition<'a>(ctx: &'a Context, out: &mut Outcome) -> Vec<&'a Profile> {
    let mut found = Vec::new();
    for p in &ctx.profiles {
        let Some(e) = &p.entry.split_idempotent else { continue };
        let a = p.algebra();
        let holds = Idempotent::new(a, e.clone())
            .and_then(|e| satisfies_corner_condition(a, &e))
            .unwrap_or(false);
        out.detail(format!("{}: e = {} {} the corner condition", p.name(), a.format(e), if holds { "satisfies" } else { "fails" }));
        if holds {
            found.push(p);
        }
    }
    found
}

fn p3_7(ctx: &Context, out: &mut Outcome) {
    for p in corner_condition(ctx, out) {
        compare(out, p, "JCent", p.subspace(MapKind::JCent), "Cent", p.subspace(MapKind::Cent));
    }
}

/// Entries with a supplied idempotent `e` and `e^⊥Ae = 0` verified.
fn triangular<'a>(ctx: &'a Context, out: &mut Outcome) -> Vec<&'a Profile> {
    let mut found = Vec::new();
    for p in ctx.profiles.iter().filter(|p| p.entry.triangular) {
        let a = p.algebra();
        let e = p.entry.split_idempotent.clone().expect("triangular entries carry their idempotent");
        let ok = Idempotent::new(a, e)
            .map(|e| e.is_nontrivial(a) && peirce(a, &e).perp_a_e.is_zero())
            .unwrap_or(false);
        out.expect(ok, format!("{}: triangular (e^⊥Ae = 0)", p.name()));
        if ok {
            found.push(p);
        }
    }
    found
}

fn c3_8(ctx: &Context, out: &mut Outcome) {
    for p in triangular(ctx, out) {
        compare(out, p, "JCent", p.subspace(MapKind::JCent), "Cent", p.subspace(MapKind::Cent));
    }
}

fn g3_3(ctx: &Context, out: &mut Outcome) {
    let p = ctx.named("grassmann3");
    let a = p.algebra();
    let c = p.chain();
    out.expect(
        c.z.dim() == 2 && !c.z.is_full() && c.z_j.is_full() && c.z_q.is_full(),
        format!("grassmann3: dims (Z, Z_J, Z_Q, A) = ({}, {}, {}, {})", c.z.dim(), c.z_j.dim(), c.z_q.dim(), a.dim()),
    );
    let all = jordan_multiplications(a, &Subspace::full(a.field(), a.dim()));
    compare(out, p, "JCent", p.subspace(MapKind::JCent), "{α∘· : α ∈ A}", &all);
    let central = preimage_within(&Subspace::full(a.field(), a.dim()), &jordan_operator(a), p.subspace(MapKind::Cent));
    compare(out, p, "{α : α∘· ∈ Cent}", &central, "Z", &c.z);
    for label in ["e12", "e23"] {
        let f = LinearMap::jordan_multiplication(a, &a.element(label));
        out.expect(
            p.space(MapKind::JCent).contains(&f) && !p.space(MapKind::Cent).contains(&f),
            format!("grassmann3: x ↦ {label}∘x is a Jordan centralizer but not a centralizer"),
        );
    }
}

/// `α ↦ vec(α∘·)` as an `n² × n` matrix.
pub fn jordan_operator(algebra: &Algebra) -> Matrix {
    let n = algebra.dim();
    let columns: Vec<Vec<_>> =
        (0..n).map(|k| LinearMap::jordan_multiplication(algebra, &algebra.basis_element(k)).to_vec()).collect();
    let rows = (0..n * n).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    Matrix::from_rows(algebra.field(), n, rows).expect("rows have width n")
}

fn span_of(a: &Algebra, elements: &[&[&str]]) -> Subspace {
    let vectors = elements
        .iter()
        .map(|terms| terms.iter().fold(a.zero(), |acc, l| acc.add(&a.element(l))).into_coords())
        .collect();
    Subspace::from_vectors(a.field(), a.dim(), vectors).expect("elements of the algebra")
}

fn s3_4(ctx: &Context, out: &mut Outcome) {
    let p = ctx.named("primer");
    let a = p.algebra();
    let c = p.chain();
    out.expect(
        (c.z.dim(), c.z_j.dim(), c.z_q.dim()) == (3, 4, 5),
        format!("primer: (dim Z, dim Z_J, dim Z_Q) = ({}, {}, {})", c.z.dim(), c.z_j.dim(), c.z_q.dim()),
    );
    compare(out, p, "Z", &c.z, "span{1, e13+e24, e14}", &span_of(a, &[&["1"], &["e13", "e24"], &["e14"]]));
    compare(out, p, "Z_J", &c.z_j, "span{1, e13, e24, e14}", &span_of(a, &[&["1"], &["e13"], &["e24"], &["e14"]]));
    compare(
        out,
        p,
        "Z_Q",
        &c.z_q,
        "span{1, e13, e24, e14, e23}",
        &span_of(a, &[&["1"], &["e13"], &["e24"], &["e14"], &["e23"]]),
    );
    let e13 = LinearMap::jordan_multiplication(a, &a.element("e13"));
    let e23 = LinearMap::jordan_multiplication(a, &a.element("e23"));
    out.expect(
        p.space(MapKind::JCent).contains(&e13) && !p.space(MapKind::Cent).contains(&e13),
        "primer: x ↦ e13∘x is a proper Jordan centralizer".into(),
    );
    out.expect(
        p.space(MapKind::QJCent).contains(&e23) && !p.space(MapKind::JCent).contains(&e23),
        "primer: x ↦ e23∘x is a proper quasi Jordan centralizer".into(),
    );
}

fn s4_0(ctx: &Context, out: &mut Outcome) {
    for p in &ctx.profiles {
        let both = intersect(p.subspace(MapKind::JCent), p.subspace(MapKind::JDer));
        out.expect(both.is_zero(), format!("{}: dim (JCent ∩ JDer) = {}", p.name(), both.dim()));
    }
}

fn l4_1(ctx: &Context, out: &mut Outcome) {
    for p in &ctx.profiles {
        let a = p.algebra();
        let qjder = p.subspace(MapKind::QJDer);
        let split = sum(p.subspace(MapKind::JCent), p.subspace(MapKind::JDer));
        let unit_in_zj = preimage_within(qjder, &evaluation_at_unit(a), &p.chain().z_j);
        compare(out, p, "{f ∈ QJDer : f(1) ∈ Z_J}", &unit_in_zj, "JCent + JDer", &split);
        for f in p.space(MapKind::QJDer).basis_maps() {
            let in_split = split.contains(&f.to_vec()).expect("same ambient");
            match maps::classify_qjder(a, &f) {
                Ok(c) if matches!(c.verdict, Verdict::Split { .. }) == in_split => {}
                Ok(_) => out.counterexample(format!("{}: classification disagrees with JCent + JDer membership", p.name())),
                Err(e) => out.counterexample(format!("{}: {e}", p.name())),
            }
        }
    }
}

fn ex4(ctx: &Context, out: &mut Outcome) {
    let p = ctx.named("primer");
    let a = p.algebra();
    let (f, h) = catalog::primer_example_maps(a);
    match maps::check_generalized_identity(a, &f, &f, &h) {
        None => out.detail(format!("f(x)∘y + x∘f(y) = h(x∘y) on all {} basis pairs", a.dim() * a.dim())),
        Some(v) => out.counterexample(v.describe(a)),
    }
    out.expect(p.space(MapKind::QJDer).contains(&f), "f is a quasi Jordan derivation".into());
    let split = sum(p.subspace(MapKind::JCent), p.subspace(MapKind::JDer));
    out.expect(!split.contains(&f.to_vec()).expect("same ambient"), "f is not in JCent + JDer".into());
    match maps::classify_qjder(a, &f) {
        Ok(c) => {
            let obstructed = matches!(c.verdict, Verdict::Obstructed { .. });
            out.expect(
                obstructed && c.alpha == a.element("e23"),
                format!("classification: α = {}, {}", a.format(&c.alpha), if obstructed { "obstructed" } else { "split" }),
            );
            if let Verdict::Obstructed { pair: (i, j), value } = c.verdict {
                out.detail(format!("[[α, {}], {}] = {}", a.labels()[i], a.labels()[j], a.format(&value)));
            }
        }
        Err(e) => out.counterexample(e.to_string()),
    }
    let d = f.sub(&LinearMap::jordan_multiplication(a, &a.element("e23")));
    let x = a.element("e12+e34");
    let dx = d.apply(&x);
    let lhs = a.jordan(&dx, &x).expect("same algebra").add(&a.jordan(&x, &dx).expect("same algebra"));
    let four_e14 = a.element("e14").scale(&a.field().from_i64(-4));
    out.expect(
        lhs == four_e14 && d.apply(&a.jordan(&x, &x).expect("same algebra")).is_zero(),
        format!("x = e12+e34: d(x∘x) = 0 but d(x)∘x + x∘d(x) = {}", a.format(&lhs)),
    );
}

fn p4_2(ctx: &Context, out: &mut Outcome) {
    for p in idempotent_generated(ctx, out) {
        let expected = sum(p.subspace(MapKind::Cent), p.subspace(MapKind::JDer));
        compare(out, p, "QJDer", p.subspace(MapKind::QJDer), "Cent + JDer", &expected);
    }
}

fn p4_3(ctx: &Context, out: &mut Outcome) {
    for p in corner_condition(ctx, out) {
        let expected = sum(p.subspace(MapKind::Cent), p.subspace(MapKind::JDer));
        compare(out, p, "QJDer", p.subspace(MapKind::QJDer), "Cent + JDer", &expected);
    }
}

fn qjder_is_cent_plus_der(out: &mut Outcome, p: &Profile) {
    let expected = sum(p.subspace(MapKind::Cent), p.subspace(MapKind::Der));
    compare(out, p, "QJDer", p.subspace(MapKind::QJDer), "Cent + Der", &expected);
    compare(out, p, "JDer", p.subspace(MapKind::JDer), "Der", p.subspace(MapKind::Der));
}

fn c4_4(ctx: &Context, out: &mut Outcome) {
    for p in ctx.matrix_algebras() {
        qjder_is_cent_plus_der(out, p);
    }
}

fn c4_5(ctx: &Context, out: &mut Outcome) {
    for p in triangular(ctx, out) {
        qjder_is_cent_plus_der(out, p);
    }
}

fn c4_6(ctx: &Context, out: &mut Outcome) {
    if ctx.field != Field::Rational {
        return out.skip("semiprimeness is decided only in characteristic 0");
    }
    for p in ctx.profiles.iter().filter(|p| p.semiprime() == Some(true)) {
        let expected = sum(p.subspace(MapKind::Cent), p.subspace(MapKind::Der));
        compare(out, p, "QJDer", p.subspace(MapKind::QJDer), "Cent + Der", &expected);
    }
}

macro_rules! check {
    ($id:literal, $anchor:literal, $statement:literal, $run:ident) => {
        Check { id: $id, anchor: $anchor, statement: $statement, run: $run }
    };
}

/// The suite, in report order.
pub const CHECKS: &[Check] = &[
    check!("T2.1a", "Theorem 2.1(a)", "GJDer = QJCent + QJDer", t2_1a),
    check!("T2.1b", "Theorem 2.1(b)", "JCent = QJCent ∩ QJDer", t2_1b),
    check!("T2.3", "Theorem 2.3", "GJDer = Cent + Der for semiprime algebras", t2_3),
    check!("Ex2-T2", "Example 1", "on T2, x ↦ e12∘x is in QJCent, not in JCent and not an h-map", ex2_t2),
    check!("R2.2", "Remark 2.2", "JCent ≠ QJCent on upper triangular matrices", r2_2),
    check!("T3.2a", "Theorem 3.2(a)", "QJCent = { x ↦ α∘x : α ∈ Z_Q }", t3_2a),
    check!("T3.2b", "Theorem 3.2(b)", "JCent = { x ↦ α∘x : α ∈ Z_J }", t3_2b),
    check!("C3.3", "Corollary 3.3", "equal centers force equal centralizer spaces", c3_3),
    check!("P3.4", "Proposition 3.4", "QJCent = Cent for matrix algebras", p3_4),
    check!("P3.5", "Proposition 3.5", "QJCent = Cent for semiprime algebras", p3_5),
    check!("P3.6", "Proposition 3.6", "JCent = Cent for algebras generated by idempotents", p3_6),
    check!("P3.7", "Proposition 3.7", "JCent = Cent given an idempotent with the corner condition", p3_7),
    check!("C3.8", "Corollary 3.8", "JCent = Cent for triangular algebras", c3_8),
    check!("G3.3", "Section 3.3", "Grassmann-type algebra: Z ≠ A = Z_J = Z_Q", g3_3),
    check!("S3.4", "Section 3.4", "primer algebra: Z ⊂ Z_J ⊂ Z_Q with dims 3, 4, 5", s3_4),
    check!("S4.0", "Section 4", "JCent ∩ JDer = 0", s4_0),
    check!("L4.1", "Lemma 4.1", "f ∈ QJDer lies in JCent + JDer iff f(1) ∈ Z_J", l4_1),
    check!("Ex4", "Section 4 example", "a quasi Jordan derivation outside JCent + JDer", ex4),
    check!("P4.2", "Proposition 4.2", "QJDer = Cent + JDer for algebras generated by idempotents", p4_2),
    check!("P4.3", "Proposition 4.3", "QJDer = Cent + JDer given an idempotent with the corner condition", p4_3),
    check!("C4.4", "Corollary 4.4", "QJDer = Cent + Der for matrix algebras", c4_4),
    check!("C4.5", "Corollary 4.5", "QJDer = Cent + Der for triangular algebras", c4_5),
    check!("C4.6", "Corollary 4.6", "QJDer = Cent + Der for semiprime algebras", c4_6),
];

pub fn check_ids() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.id)
}

fn record(check: &Check, ctx: &Context) -> CheckRecord {
    let mut out = Outcome::default();
    (check.run)(ctx, &mut out);
    let status = if out.failed {
        Status::Fail
    } else if out.skipped {
        Status::Skip
    } else {
        Status::Pass
    };
    CheckRecord {
        id: check.id,
        statement: check.statement,
        anchor: check.anchor,
        status,
        details: out.details,
        counterexample: out.counterexample,
    }
}

/// Runs the checks with the given ids (`"all"` selects the whole suite) in
/// suite order.
pub fn run(ctx: &Context, ids: &[&str]) -> Result<VerificationReport, VerifyError> {
    let mut selected: Vec<&Check> = Vec::new();
    for id in ids {
        if *id == "all" {
            selected = CHECKS.iter().collect();
            break;
        }
        let check = CHECKS.iter().find(|c| c.id == *id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?;
        if !selected.iter().any(|c| c.id == check.id) {
            selected.push(check);
        }
    }
    selected.sort_by_key(|c| CHECKS.iter().position(|d| d.id == c.id));
    let checks: Vec<CheckRecord> = selected.par_iter().map(|c| record(c, ctx)).collect();
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Ok(VerificationReport { field: ctx.field.to_string(), passed, checks })
}

pub fn run_all(field: Field) -> Result<VerificationReport, VerifyError> {
    run(&Context::new(field)?, &["all"])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = check_ids().collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), CHECKS.len());
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let ctx = Context::new(Field::Rational).unwrap();
        assert_eq!(run(&ctx, &["T9.9"]), Err(VerifyError::UnknownCheck("T9.9".into())));
    }

    #[test]
    fn selected_checks_come_back_in_suite_order() {
        let ctx = Context::new(Field::Rational).unwrap();
        let report = run(&ctx, &["S4.0", "S3.4", "S4.0"]).unwrap();
        let ids: Vec<_> = report.checks.iter().map(|c| c.id).collect();
        assert_eq!(ids, ["S3.4", "S4.0"]);
        assert!(report.passed);
    }

    #[test]
    fn preimage_of_center_under_jordan_multiplication() {
        let p = catalog::primer_algebra(Field::Rational).unwrap().algebra;
        let full = Subspace::full(Field::Rational, p.dim());
        let cent = maps::cent_space(&p);
        assert_eq!(preimage_within(&full, &jordan_operator(&p), cent.subspace()), centers::center(&p));
    }

    #[test]
    fn primer_example_check_passes() {
        let ctx = Context::new(Field::Rational).unwrap();
        let report = run(&ctx, &["Ex4"]).unwrap();
        assert_eq!(report.checks[0].status, Status::Pass, "{}", report.to_table());
    }
}
