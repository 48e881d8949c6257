//! The batch commands behind the `gz-engine` binary.
//!
//! Every command returns a [`Report`] carrying the config hash and seed; the binary maps
//! `pass` to the exit code.

use std::path::PathBuf;
use std::time::Instant;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::config::{EngineConfig, FunctionalSpec, LoadedConfig, OperatorSpec};
use super::dsl::parse_poly;
use crate::arith::scalar::{from_reprs, to_reprs};
use crate::arith::{fmt_point, fmt_scalar, Polynomial, Scalar, ScalarRepr};
use crate::error::{Error, Result};
use crate::modules::sample::random_germ;
use crate::modules::{apply_operator_to_germ, FunctionalBasisElement, FunctionalVector, ModuleEngine, VectorEntryJson};
use crate::simplicity::{
    build_gamma_regular, build_gamma_singular, certify_canonical_module, check_regular_conditions, GraphMode, Verdict,
};
use crate::skew::{build_type_i, check_gl_relations, structure_element, structure_scalar, DdPart, GzGenerators, SkewElement};

/// Output of one command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config_hash: String,
    pub seed: u64,
    pub pass: bool,
    pub result: Value,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            format!(
                "{} [{}] seed={} config={}\n{}",
                self.command,
                if self.pass { "PASS" } else { "FAIL" },
                self.seed,
                &self.config_hash[..12],
                self.text
            )
        } else {
            serde_json::to_string_pretty(self).expect("serializable") + "\n"
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandOptions {
    pub seed: u64,
    pub samples: usize,
    pub radius: u32,
    pub mode: GraphMode,
    pub out: Option<PathBuf>,
    pub operator: Option<PathBuf>,
    pub functional: Option<PathBuf>,
}

impl Default for CommandOptions {
    fn default() -> Self {
        Self { seed: 0, samples: 20, radius: 2, mode: GraphMode::Regular, out: None, operator: None, functional: None }
    }
}

fn report(cmd: &str, cfg: &LoadedConfig, opts: &CommandOptions, pass: bool, result: Value, text: String) -> Report {
    Report { command: cmd.into(), config_hash: cfg.hash.clone(), seed: opts.seed, pass, result, text }
}

fn sample_points(config: &EngineConfig, dim: usize) -> Result<Vec<Vec<Scalar>>> {
    let mut pts = config.sample_points();
    if pts.is_empty() {
        pts.push(match &config.v {
            Some(v) => from_reprs(v.clone()),
            None => vec![Scalar::zero(); dim],
        });
    }
    for p in &pts {
        if p.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
        }
    }
    Ok(pts)
}

#[derive(Serialize)]
struct InvarianceFailure {
    operator: String,
    sample: usize,
    point: Vec<ScalarRepr>,
    target: Vec<String>,
}

/// Applies every operator to seeded random invariant germs and lists the targets where the
/// output is not holomorphic.
pub fn cmd_verify_invariance(cfg: &LoadedConfig, opts: &CommandOptions) -> Result<Report> {
    let resolved = cfg.config.resolve()?;
    let group = &resolved.group;
    if resolved.operators.is_empty() {
        return Err(Error::Config("no operators to verify".into()));
    }
    let points = sample_points(&cfg.config, group.dim())?;
    let degree = cfg.config.degree.unwrap_or(2);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let germs = (0..opts.samples)
        .map(|i| random_germ(&mut rng, group, &points[i % points.len()], degree))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, usize)> =
        (0..resolved.operators.len()).flat_map(|o| (0..germs.len()).map(move |s| (o, s))).collect();
    let outcomes: Vec<Option<InvarianceFailure>> = jobs
        .par_iter()
        .map(|&(o, s)| {
            let (name, op) = &resolved.operators[o];
            match apply_operator_to_germ(group, op, &germs[s]) {
                Ok(_) => Ok(None),
                Err(Error::NotHolomorphicAtGerm { target }) => Ok(Some(InvarianceFailure {
                    operator: name.clone(),
                    sample: s,
                    point: to_reprs(germs[s].base()),
                    target,
                })),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    let failures: Vec<InvarianceFailure> = outcomes.into_iter().flatten().collect();
    let ops: Vec<Value> = resolved
        .operators
        .iter()
        .map(|(n, a)| json!({"name": n, "terms": a.num_terms(), "invariant": a.is_invariant()}))
        .collect();
    let mut text = format!("{} germs x {} operators, degree {degree}\n", germs.len(), resolved.operators.len());
    for (n, a) in &resolved.operators {
        text += &format!("  {n}: {} terms, invariant = {}\n", a.num_terms(), a.is_invariant());
    }
    for f in &failures {
        text += &format!(
            "  pole: {} on sample {} at {} -> target ({})\n",
            f.operator,
            f.sample,
            fmt_point(&from_reprs(f.point.clone())),
            f.target.join(", ")
        );
    }
    let pass = failures.is_empty();
    let result = json!({"applications": jobs.len(), "operators": ops, "failures": failures});
    Ok(report("verify-invariance", cfg, opts, pass, result, text))
}

/// Checks every `gl_n` commutation relation.
pub fn cmd_commutators(cfg: &LoadedConfig, opts: &CommandOptions) -> Result<Report> {
    let c = &cfg.config;
    let n = c.n.unwrap_or(2);
    if !(2..=4).contains(&n) || (n == 4 && !c.allow_n4) {
        return Err(Error::Config(format!("n = {n} is not supported (n = 4 needs \"allow_n4\": true)")));
    }
    let start = Instant::now();
    let mut gz = GzGenerators::new(n)?;
    if c.perturb {
        // overall coefficient 1 -> 2; adding a constant to the coefficient cancels in gl_2
        let e12 = gz.get(1, 2).scale(&Scalar::from_integer(2.into()));
        gz.e.insert((1, 2), e12);
    }
    let gz = gz.with_commutators();
    let (checked, failures) = check_gl_relations(&gz.e, n);
    let secs = start.elapsed().as_secs_f64();
    let keys: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let mut rows = Vec::new();
    let mut text = String::new();
    for (a, &x) in keys.iter().enumerate() {
        for &y in &keys[a + 1..] {
            let fail = failures.iter().find(|f| f.lhs == (x, y));
            let name = format!("[E{}{}, E{}{}]", x.0, x.1, y.0, y.1);
            text += &format!("  {name:<16} {}\n", if fail.is_some() { "FAIL" } else { "ok" });
            if let Some(f) = fail {
                text += &format!("    difference: {}\n", f.difference);
            }
            rows.push(json!({"relation": name, "pass": fail.is_none(), "difference": fail.map(|f| f.difference.to_string())}));
        }
    }
    text += &format!("{checked} relations, {} failed, {secs:.3}s\n", failures.len());
    let result = json!({"n": n, "perturbed": c.perturb, "checked": checked, "failed": failures.len(), "seconds": secs, "relations": rows});
    Ok(report("commutators", cfg, opts, failures.is_empty(), result, text))
}

/// Outcome of comparing the symmetrized operator with `∂_w ∘ p φ_v` on sampled germs.
#[derive(Clone, Debug)]
pub struct StructureCheck {
    pub scalar: Option<Scalar>,
    pub expected: Scalar,
    pub samples: usize,
    pub mismatches: usize,
    pub route_checks: usize,
    pub route_mismatches: usize,
}

impl StructureCheck {
    pub fn holds(&self) -> bool {
        self.scalar.as_ref().is_some_and(|a| !a.is_zero()) && self.mismatches == 0 && self.route_mismatches == 0
    }
}

/// Recovers the single scalar `a` with `Σ_τ τ·(Δ_v/Δ pφ_v) = a ∂_w ∘ pφ_v` on invariant germs
/// and checks the functional formula against the pairing route.
pub fn check_structure_theorem(config: &EngineConfig, seed: u64, samples: usize) -> Result<StructureCheck> {
    let group = match &config.group {
        Some(spec) => super::config::build_group(spec)?,
        None => super::config::build_group(&super::config::GroupSpec::TypeAProduct(vec![3]))?,
    };
    let v = match &config.v {
        Some(v) => from_reprs(v.clone()),
        None => crate::arith::ints(&[0, 0, 1]),
    };
    let p = match &config.p {
        Some(src) => parse_poly(&group, src)?,
        None => Polynomial::one(group.layout()),
    };
    let stab = group.stabilizer(&v);
    let w = group.longest_short_rep(&stab)?;
    let sym = structure_element(&group, &v, &p)?;
    let dd = build_type_i(&group, &[DdPart { w, p: p.clone(), v: v.clone() }])?;
    let points = sample_points(config, group.dim())?;
    let degree = config.degree.unwrap_or(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probe: Vec<Scalar> = (0..group.dim()).map(|i| Scalar::new((2 * i as i64 + 3).into(), (7 * i as i64 + 11).into())).collect();
    let mut scalar: Option<Scalar> = None;
    let mut mismatches = 0;
    for i in 0..samples {
        let germ = random_germ(&mut rng, &group, &points[i % points.len()], degree)?.expand(&group);
        let x = germ.apply(&sym)?;
        let y = germ.apply(&dd)?;
        if scalar.is_none() {
            // first nonzero pair fixes the ratio
            for (pt, fy) in y.iter() {
                let at: Vec<Scalar> = pt.iter().zip(&probe).map(|(a, b)| a + b).collect();
                let vy = fy.eval(&at)?;
                if !vy.is_zero() {
                    let vx = x.get(pt).map(|f| f.eval(&at)).transpose()?.unwrap_or_else(Scalar::zero);
                    scalar = Some(vx / vy);
                    break;
                }
            }
        }
        let a = scalar.clone().unwrap_or_else(Scalar::zero);
        if x != y.scale(&a) {
            mismatches += 1;
        }
    }
    // Σ a_s ev ∂_w ∂_{w_s}[...] against pairing with probe germs
    let engine = ModuleEngine::with_convention(group.clone(), config.convention);
    let mut route_checks = 0;
    let mut route_mismatches = 0;
    for pt in &points {
        let label = engine.label_for(pt)?;
        let support = engine.convention().support(&label);
        for u in engine.fiber_basis(&support)? {
            let f = FunctionalBasisElement { point: label.clone(), w: u };
            route_checks += 1;
            if engine.act_on_functional(&sym, &f)? != engine.act_on_functional_structure(&v, &p, &f)? {
                route_mismatches += 1;
            }
        }
    }
    Ok(StructureCheck { scalar, expected: structure_scalar(&group, &v), samples, mismatches, route_checks, route_mismatches })
}

pub fn cmd_structure_theorem(cfg: &LoadedConfig, opts: &CommandOptions) -> Result<Report> {
    let start = Instant::now();
    let r = check_structure_theorem(&cfg.config, opts.seed, opts.samples)?;
    let secs = start.elapsed().as_secs_f64();
    let a = r.scalar.as_ref().map(fmt_scalar);
    let text = format!(
        "recovered a = {}\n∂_w Δ_v = {}\n{} germ samples, {} mismatches\n{} functionals, {} route mismatches\n{secs:.3}s\n",
        a.as_deref().unwrap_or("none"),
        fmt_scalar(&r.expected),
        r.samples,
        r.mismatches,
        r.route_checks,
        r.route_mismatches
    );
    let result = json!({
        "a": a, "expected": fmt_scalar(&r.expected), "samples": r.samples, "mismatches": r.mismatches,
        "route_checks": r.route_checks, "route_mismatches": r.route_mismatches, "seconds": secs,
    });
    Ok(report("structure-theorem", cfg, opts, r.holds(), result, text))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FunctionalInput {
    Vector(Vec<VectorEntryJson>),
    Single(FunctionalSpec),
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

/// Expands `α ∘ A` in basis functionals.
pub fn cmd_act(cfg: &LoadedConfig, opts: &CommandOptions) -> Result<Report> {
    let mut config = cfg.config.clone();
    if let Some(path) = &opts.operator {
        let spec: OperatorSpec = read_json(path)?;
        config.operators = vec![spec];
    }
    let resolved = config.resolve()?;
    let (name, op) = match resolved.operators.as_slice() {
        [one] => one.clone(),
        [] => return Err(Error::Config("no operator given".into())),
        _ => return Err(Error::Config("act takes exactly one operator".into())),
    };
    let group = resolved.group.clone();
    let engine = ModuleEngine::with_convention(group.clone(), config.convention);
    let input = match &opts.functional {
        Some(path) => read_json(path)?,
        None => FunctionalInput::Single(config.functional.clone().ok_or_else(|| Error::Config("no functional given".into()))?),
    };
    let alpha = match input {
        FunctionalInput::Vector(entries) => FunctionalVector::from_json(&group, &entries)?,
        FunctionalInput::Single(spec) => {
            let point = from_reprs(spec.point);
            if point.len() != group.dim() {
                return Err(Error::DimensionMismatch { expected: group.dim(), got: point.len() });
            }
            let label = engine.label_for(&engine.convention().support(&point))?;
            FunctionalVector::basis(FunctionalBasisElement { point: label, w: group.from_word(&spec.w)? })
        }
    };
    let out = engine.act_on_functional_vector(&op, &alpha)?;
    let text = format!("{} ∘ {name}\n= {}\n", alpha.display(&group), out.display(&group));
    let result = serde_json::to_value(out.to_json(&group))?;
    Ok(report("act", cfg, opts, true, result, text))
}

/// Schubert polynomials and their norms.
pub fn cmd_schubert(cfg: &LoadedConfig, opts: &CommandOptions) -> Result<Report> {
    let group = match (&cfg.config.group, cfg.config.operators.is_empty()) {
        (Some(spec), _) => super::config::build_group(spec)?,
        (None, false) => cfg.config.resolve()?.group,
        (None, true) => return Err(Error::Config("no \"group\" given".into())),
    };
    let engine = ModuleEngine::new(group.clone());
    let mut rows = Vec::new();
    let mut text = String::new();
    for w in 0..group.order() {
        let word = group.word(w);
        let name = if word.is_empty() { "e".to_string() } else { word.iter().map(|s| format!("s{}", s + 1)).collect::<Vec<_>>().join("") };
        let poly = engine.schubert().poly(w).to_string();
        let norm = fmt_scalar(&engine.norm(w));
        text += &format!("  {name:<12} {poly:<40} norm {norm}\n");
        rows.push(json!({"w": word, "name": name, "poly": poly, "norm": norm}));
    }
    Ok(report("schubert", cfg, opts, true, Value::Array(rows), text))
}

/// Builds the Γ-graph on the window and runs the simplicity checks; with `--out` the graph is
/// also written as `<out>.dot` and `<out>.graph.json`.
pub fn cmd_gamma(cfg: &LoadedConfig, opts: &CommandOptions) -> Result<Report> {
    let resolved = cfg.config.resolve()?;
    let gens: Vec<SkewElement> = resolved.operators.iter().map(|(_, a)| a.clone()).collect();
    let v = cfg.config.v_point()?;
    let (graph, cert) = match opts.mode {
        GraphMode::Regular => (build_gamma_regular(&gens, &v, opts.radius)?, check_regular_conditions(&gens, &v, opts.radius)?),
        GraphMode::Singular => (build_gamma_singular(&gens, &v, opts.radius)?, certify_canonical_module(&gens, &v, opts.radius)?),
    };
    if let Some(out) = &opts.out {
        std::fs::write(out.with_extension("dot"), graph.to_dot())?;
        std::fs::write(out.with_extension("graph.json"), serde_json::to_string_pretty(&graph.to_json())?)?;
    }
    let mut text = format!(
        "v = {}, radius {}, {:?} mode: {} vertices, {} edges, {} components\n",
        fmt_point(&v),
        opts.radius,
        opts.mode,
        graph.vertices.len(),
        graph.edges.len(),
        graph.sccs().len()
    );
    for (k, c) in &cert.conditions {
        text += &format!("  {k:<20} {}\n", serde_json::to_string(c)?);
    }
    text += &format!("verdict: {}\n", serde_json::to_string(&cert.verdict)?);
    let result = json!({"certificate": cert, "graph": graph.to_json()});
    Ok(report("gamma-graph", cfg, opts, cert.verdict == Verdict::CertifiedOnWindow, result, text))
}

/// Exit code for an error: 2 for usage and configuration problems, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::Parse(_) | Error::Io(_) | Error::Json(_) | Error::DimensionMismatch { .. } => 2,
        _ => 1,
    }
}
