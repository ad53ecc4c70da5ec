//! Job file schema. Every object rejects unknown fields.

use std::path::Path;

use serde::Deserialize;

use crate::JobError;

pub const SCHEMA: &str = "fhcalc-job/1";
pub const MAX_TRUNCATION: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub schema: String,
    pub field: FieldSpec,
    pub truncation: usize,
    pub task: Task,
    #[serde(default)]
    pub format: Format,
    /// Skip the Maschke check on symmetric group coefficients.
    #[serde(default)]
    pub assume_projective: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Task {
    ModuleTor(ModuleTorPayload),
    ModuleExt(ModuleExtPayload),
    Hochschild {
        algebra: AlgebraSpec,
        #[serde(default)]
        strategy: Strategy,
    },
    StableTor {
        additive: AdditiveInput,
    },
    PsiExt {
        additive: AdditiveExtInput,
        /// Number of generators of `E*`; omitted for `E*_∞`.
        #[serde(default)]
        r: Option<usize>,
    },
    TensorFunctor {
        pi: Vec<usize>,
        rho: Vec<usize>,
        /// `tor[a][b]` for block `a` of `pi` and block `b` of `rho`.
        tor: Vec<Vec<TorEntry>>,
        #[serde(default)]
        u: Option<RepSpec>,
        #[serde(default)]
        v: Option<RepSpec>,
    },
    Schur {
        v: RepSpec,
        w: Vec<usize>,
    },
    #[serde(rename = "example-C")]
    ExampleC {
        additive: AdditiveInput,
        v: RepSpec,
    },
    GlHomology {
        stable: Vec<usize>,
        tor: TorEntry,
    },
    Verify {
        suite: String,
        #[serde(default)]
        seed: Option<u64>,
    },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::ModuleTor(_) => "module-tor",
            Task::ModuleExt(_) => "module-ext",
            Task::Hochschild { .. } => "hochschild",
            Task::StableTor { .. } => "stable-tor",
            Task::PsiExt { .. } => "psi-ext",
            Task::TensorFunctor { .. } => "tensor-functor",
            Task::Schur { .. } => "schur",
            Task::ExampleC { .. } => "example-C",
            Task::GlHomology { .. } => "gl-homology",
            Task::Verify { .. } => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Naive,
    #[default]
    Greedy,
    Minimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    #[default]
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    #[default]
    Right,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleTorPayload {
    pub algebra: AlgebraSpec,
    pub right: ModuleSpec,
    pub left: ModuleSpec,
    #[serde(default)]
    pub strategy: Strategy,
    #[serde(default)]
    pub route: Route,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleExtPayload {
    pub algebra: AlgebraSpec,
    pub source: ModuleSpec,
    pub target: ModuleSpec,
    #[serde(default)]
    pub side: SideSpec,
    #[serde(default)]
    pub strategy: Strategy,
}

/// A preset name such as `"dual_numbers(2)"`, or structure constants
/// `c[(i*n + j)*n + k]` with the unit and an optional augmentation.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum AlgebraSpec {
    Preset(String),
    Structure {
        dim: usize,
        constants: Vec<i64>,
        unit: Vec<i64>,
        #[serde(default)]
        augmentation: Option<Vec<i64>>,
    },
}

/// A module; its side is fixed by the role it plays in the task.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum ModuleSpec {
    /// `"trivial"` (augmentation) or `"regular"`.
    Preset(String),
    /// One-dimensional: `b_t` acts by `character[t]`.
    Character(Vec<i64>),
    /// `A` modulo the one-sided ideal generated by these elements.
    Quotient(Vec<Vec<i64>>),
    /// One `dim × dim` matrix (list of rows) per algebra basis element.
    Action { dim: usize, matrices: Vec<Vec<Vec<i64>>> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum AdditiveInput {
    /// Additive Tor given as a dimension list from degree 0.
    Dims(Vec<usize>),
    /// Additive Tor computed as module Tor.
    Modules(ModuleTorPayload),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum AdditiveExtInput {
    Dims(Vec<usize>),
    Modules(ModuleExtPayload),
}

/// One functor Tor group.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum TorEntry {
    /// Additive Tor dimensions; converted with `⊗ T_*`.
    Additive(Vec<usize>),
    /// Additive Tor as module Tor; converted with `⊗ T_*`.
    Modules(ModuleTorPayload),
    /// Functor Tor dimensions, used as given.
    Functor(Vec<usize>),
}

/// A representation of a Young subgroup: a preset (`trivial`, `sign`,
/// `standard`, `regular`) or one matrix per Coxeter generator. The group is
/// `blocks` if given, else `𝔖_d`, else inferred from the task.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub matrices: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default)]
    pub dim: Option<usize>,
    #[serde(default)]
    pub d: Option<usize>,
    #[serde(default)]
    pub blocks: Option<Vec<usize>>,
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<Self, JobError> {
        let spec: JobSpec =
            serde_json::from_str(text).map_err(|e| JobError::Validation(format!("job file: {e}")))?;
        if spec.schema != SCHEMA {
            return Err(JobError::Validation(format!(
                "schema: expected \"{SCHEMA}\", got \"{}\"",
                spec.schema
            )));
        }
        if spec.truncation > MAX_TRUNCATION {
            return Err(JobError::Validation(format!(
                "truncation: {} exceeds the maximum {MAX_TRUNCATION}",
                spec.truncation
            )));
        }
        Ok(spec)
    }

    pub fn from_path(path: &Path) -> Result<Self, JobError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| JobError::Validation(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            JobError::Validation(m) => JobError::Validation(format!("{}: {m}", path.display())),
            other => other,
        })
    }
}
