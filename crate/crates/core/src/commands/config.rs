//! Engine configuration files and their resolution into groups and operators.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use super::dsl::{parse_poly, parse_skew};
use crate::arith::scalar::from_reprs;
use crate::arith::{Matrix, Scalar, ScalarRepr, VariableLayout};
use crate::error::{Error, Result};
use crate::groups::{ReflectionGroup, RootSystem};
use crate::modules::FunctionalConvention;
use crate::skew::json::SkewTermJson;
use crate::skew::{build_type_i, build_type_ii, structure_element, DdPart, GzGenerators, OgzGenerators, SkewElement};

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    TypeAProduct(Vec<usize>),
    Dihedral(u32),
    Roots {
        simple: Vec<Vec<ScalarRepr>>,
        #[serde(default)]
        form: Option<Vec<Vec<ScalarRepr>>>,
        #[serde(default)]
        rows: Option<Vec<usize>>,
    },
}

#[derive(Clone, Debug, Deserialize)]
pub struct PartSpec {
    /// Reduced word in 0-based simple reflection indices.
    pub w: Vec<usize>,
    pub p: String,
    pub v: Vec<ScalarRepr>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case", deny_unknown_fields)]
pub enum OperatorSpec {
    /// `E_ij` of `gl_n`; distant indices come from commutators.
    Gz { n: usize, i: usize, j: usize },
    /// All `E_k`, `F_k` (or one of them with `k` and `kind`).
    Ogz {
        rows: Vec<usize>,
        #[serde(default = "one_repr")]
        a: ScalarRepr,
        #[serde(default)]
        k: Option<usize>,
        #[serde(default)]
        kind: Option<String>,
    },
    Dsl { expr: String },
    Structure { v: Vec<ScalarRepr>, p: String },
    TypeI { parts: Vec<PartSpec> },
    TypeIi { parts: Vec<PartSpec> },
    Terms { terms: Vec<SkewTermJson> },
}

fn one_repr() -> ScalarRepr {
    ScalarRepr(Scalar::from_integer(1.into()))
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EngineConfig {
    #[serde(default)]
    pub group: Option<GroupSpec>,
    #[serde(default)]
    pub operators: Vec<OperatorSpec>,
    #[serde(default)]
    pub v: Option<Vec<ScalarRepr>>,
    /// Base points for sampled germs.
    #[serde(default)]
    pub points: Vec<Vec<ScalarRepr>>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub perturb: bool,
    #[serde(default)]
    pub allow_n4: bool,
    #[serde(default)]
    pub convention: FunctionalConvention,
    #[serde(default)]
    pub degree: Option<u32>,
    /// Coefficient polynomial for the structure-theorem command.
    #[serde(default)]
    pub p: Option<String>,
    #[serde(default)]
    pub functional: Option<FunctionalSpec>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FunctionalSpec {
    pub point: Vec<ScalarRepr>,
    #[serde(default)]
    pub w: Vec<usize>,
}

/// A loaded config together with the hash of its bytes.
#[derive(Clone, Debug)]
pub struct LoadedConfig {
    pub config: EngineConfig,
    pub hash: String,
}

pub fn hash_bytes(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl LoadedConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let config: EngineConfig = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        Ok(Self { config, hash: hash_bytes(text.as_bytes()) })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn empty() -> Self {
        Self { config: EngineConfig::default(), hash: hash_bytes(b"") }
    }
}

fn matrix(rows: &[Vec<ScalarRepr>]) -> Matrix {
    rows.iter().map(|r| from_reprs(r.clone())).collect()
}

pub fn build_group(spec: &GroupSpec) -> Result<Arc<ReflectionGroup>> {
    let rs = match spec {
        GroupSpec::TypeAProduct(rows) => RootSystem::type_a_product(rows)?,
        GroupSpec::Dihedral(m) => RootSystem::dihedral(*m)?,
        GroupSpec::Roots { simple, form, rows } => {
            let simple = matrix(simple);
            let dim = simple.first().map(|r| r.len()).ok_or_else(|| Error::Config("no simple roots".into()))?;
            let layout = match rows {
                Some(r) => VariableLayout::new(r)?,
                None => VariableLayout::flat(dim),
            };
            RootSystem::new(layout, simple, form.as_ref().map(|f| matrix(f)))?
        }
    };
    ReflectionGroup::generate(rs)
}

/// Operators with their display names, all over one group.
pub struct Resolved {
    pub group: Arc<ReflectionGroup>,
    pub operators: Vec<(String, SkewElement)>,
}

fn part(group: &Arc<ReflectionGroup>, p: &PartSpec) -> Result<DdPart> {
    Ok(DdPart { w: group.from_word(&p.w)?, p: parse_poly(group, &p.p)?, v: from_reprs(p.v.clone()) })
}

impl EngineConfig {
    /// The group fixed by a builder operator, else by the `group` field.
    pub fn resolve(&self) -> Result<Resolved> {
        let mut group: Option<Arc<ReflectionGroup>> = None;
        let mut operators = Vec::new();
        let mut pending = Vec::new();
        for spec in &self.operators {
            match spec {
                OperatorSpec::Gz { n, i, j } => {
                    if *n > 3 && !self.allow_n4 {
                        return Err(Error::Config("gl_4 generators need \"allow_n4\": true".into()));
                    }
                    let gz = GzGenerators::new(*n)?;
                    let gz = if i.abs_diff(*j) > 1 { gz.with_commutators() } else { gz };
                    let a = gz.e.get(&(*i, *j)).ok_or_else(|| Error::Config(format!("no generator E{i}{j} for n = {n}")))?.clone();
                    check_group(&mut group, &gz.group)?;
                    operators.push((format!("E{i}{j}"), a));
                }
                OperatorSpec::Ogz { rows, a, k, kind } => {
                    let o = OgzGenerators::new(rows, a.0.clone())?;
                    check_group(&mut group, &o.group)?;
                    let g = group.clone().unwrap();
                    let rebase = |x: &SkewElement| SkewElement::from_terms(&g, x.to_terms());
                    for idx in 0..o.e.len() {
                        if k.is_some_and(|k| k != idx + 1) {
                            continue;
                        }
                        if kind.as_deref() != Some("f") {
                            operators.push((format!("E{}", idx + 1), rebase(&o.e[idx])));
                        }
                        if kind.as_deref() != Some("e") {
                            operators.push((format!("F{}", idx + 1), rebase(&o.f[idx])));
                        }
                    }
                }
                other => pending.push((operators.len(), other.clone())),
            }
        }
        let group = match (group, &self.group) {
            (Some(g), Some(spec)) => {
                let h = build_group(spec)?;
                if h.layout() != g.layout() {
                    return Err(Error::Config("\"group\" disagrees with the builder's layout".into()));
                }
                g
            }
            (Some(g), None) => g,
            (None, Some(spec)) => build_group(spec)?,
            (None, None) => return Err(Error::Config("no \"group\" and no builder operator".into())),
        };
        // rebase builder operators onto the shared group and resolve the rest
        let mut operators: Vec<(String, SkewElement)> =
            operators.into_iter().map(|(n, a)| (n, SkewElement::from_terms(&group, a.to_terms()))).collect();
        for (offset, (at, spec)) in pending.into_iter().enumerate() {
            let (name, a) = match &spec {
                OperatorSpec::Dsl { expr } => (expr.clone(), parse_skew(&group, expr)?),
                OperatorSpec::Structure { v, p } => {
                    ("structure".into(), structure_element(&group, &from_reprs(v.clone()), &parse_poly(&group, p)?)?)
                }
                OperatorSpec::TypeI { parts } => {
                    let parts = parts.iter().map(|p| part(&group, p)).collect::<Result<Vec<_>>>()?;
                    ("type_i".into(), build_type_i(&group, &parts)?)
                }
                OperatorSpec::TypeIi { parts } => {
                    let parts = parts.iter().map(|p| part(&group, p)).collect::<Result<Vec<_>>>()?;
                    ("type_ii".into(), build_type_ii(&group, &parts)?)
                }
                OperatorSpec::Terms { terms } => ("terms".into(), SkewElement::from_json(&group, terms)?),
                _ => unreachable!("builders handled above"),
            };
            operators.insert(at + offset, (name, a));
        }
        Ok(Resolved { group, operators })
    }

    pub fn v_point(&self) -> Result<Vec<Scalar>> {
        self.v.clone().map(from_reprs).ok_or_else(|| Error::Config("missing \"v\"".into()))
    }

    pub fn sample_points(&self) -> Vec<Vec<Scalar>> {
        self.points.iter().map(|p| from_reprs(p.clone())).collect()
    }
}

fn check_group(slot: &mut Option<Arc<ReflectionGroup>>, new: &Arc<ReflectionGroup>) -> Result<()> {
    match slot {
        None => {
            *slot = Some(new.clone());
            Ok(())
        }
        Some(g) if g.layout() == new.layout() && g.root_system().simple_roots() == new.root_system().simple_roots() => Ok(()),
        Some(_) => Err(Error::Config("operators use different groups".into())),
    }
}
