//! Turns a validated job into core objects and runs it.

use fhcalc_core::fdalg::{
    self, AlgebraPreset, FDAlgebra, FDModule, ResolutionStrategy, Side, TorRoute,
};
use fhcalc_core::functor_calc::{
    self, AdditiveTorMatrix, Fact, Hypothesis, Outcome, Provenance, SchurDatum, TorSource,
};
use fhcalc_core::graded::Generators;
use fhcalc_core::symgrp::{GroupRepresentation, ProjectivityPolicy, YoungComposition};
use fhcalc_core::verify::{self, Suite};
use fhcalc_core::{GradedSpace, Matrix, PrimeField};

use crate::job::{
    AdditiveExtInput, AdditiveInput, AlgebraSpec, JobSpec, ModuleExtPayload, ModuleSpec,
    ModuleTorPayload, RepSpec, Route, SideSpec, Strategy, Task, TorEntry,
};
use crate::report::{Report, ReportBody};
use crate::JobError;

struct Ctx {
    field: PrimeField,
    truncation: usize,
    policy: ProjectivityPolicy,
}

fn invalid(path: &str, msg: impl std::fmt::Display) -> JobError {
    JobError::Validation(format!("{path}: {msg}"))
}

/// Validates and runs one job. `assume_projective` from the command line is
/// OR-ed with the job's own flag.
pub fn run_job(spec: &JobSpec, assume_projective: bool) -> Result<Report, JobError> {
    let field = PrimeField::new(spec.field.p).map_err(|e| invalid("field.p", e))?;
    let ctx = Ctx {
        field,
        truncation: spec.truncation,
        policy: ProjectivityPolicy {
            assume_projective: assume_projective || spec.assume_projective,
        },
    };
    let body = match &spec.task {
        Task::ModuleTor(payload) => {
            let space = module_tor(&ctx, payload, "task")?;
            table(space, Provenance::new(&[Fact::ModuleTor], &[Hypothesis::GfpDimensionsAuthoritative]))
        }
        Task::ModuleExt(payload) => {
            let space = module_ext(&ctx, payload, "task")?;
            table(space, Provenance::new(&[Fact::ModuleExt], &[Hypothesis::GfpDimensionsAuthoritative]))
        }
        Task::Hochschild { algebra, strategy } => {
            let alg = build_algebra(&ctx, algebra, "task.algebra")?;
            let space = fdalg::hochschild(&alg, ctx.truncation, strategy_of(*strategy))?;
            let mut prov = Provenance::new(&[Fact::HochschildAsTor], &[Hypothesis::GfpDimensionsAuthoritative]);
            if alg.is_semisimple()? {
                prov = prov.with(Fact::HochschildPerfectness);
            }
            table(space, prov)
        }
        Task::StableTor { additive } => {
            let (add, prov) = additive_tor(&ctx, additive, "task.additive")?;
            outcome(functor_calc::apply_corollary(&add), Some(prov))
        }
        Task::PsiExt { additive, r } => {
            let (add, prov) = additive_ext(&ctx, additive, "task.additive")?;
            let generators = r.map_or(Generators::Infinite, Generators::Finite);
            outcome(functor_calc::psi_ext(&add, ctx.field, generators), Some(prov))
        }
        Task::TensorFunctor { pi, rho, tor, u, v } => tensor_functor(&ctx, pi, rho, tor, u.as_ref(), v.as_ref())?,
        Task::Schur { v, w } => {
            let rep = build_rep(&ctx, v, None, "task.v")?;
            let datum = SchurDatum::new(rep).map_err(|e| invalid("task.v", e))?;
            let w = graded_literal(&ctx, w, "task.w")?;
            outcome(functor_calc::schur_apply(&datum, &w, ctx.policy)?, None)
        }
        Task::ExampleC { additive, v } => {
            let (add, prov) = additive_tor(&ctx, additive, "task.additive")?;
            let rep = build_rep(&ctx, v, None, "task.v")?;
            let datum = SchurDatum::new(rep).map_err(|e| invalid("task.v", e))?;
            outcome(functor_calc::example_c(&add, &datum, ctx.policy)?, Some(prov))
        }
        Task::GlHomology { stable, tor } => {
            let stable = graded_literal(&ctx, stable, "task.stable")?;
            let (tor, _) = tor_entry(&ctx, tor, "task.tor")?;
            outcome(functor_calc::gl_homology(&stable, &tor)?, None)
        }
        Task::Verify { suite, seed } => {
            let suite: Suite = suite.parse().map_err(|e| invalid("task.suite", e))?;
            ReportBody::Verify(verify::run(suite, seed.unwrap_or(verify::DEFAULT_SEED)))
        }
    };
    Ok(Report {
        task: spec.task.name(),
        p: spec.field.p,
        truncation: spec.truncation,
        body,
    })
}

fn table(space: GradedSpace, provenance: Provenance) -> ReportBody {
    ReportBody::Table { space, provenance }
}

fn outcome(out: Outcome, upstream: Option<Provenance>) -> ReportBody {
    let provenance = match upstream {
        Some(p) => out.provenance.merge(&p),
        None => out.provenance,
    };
    table(out.space, provenance)
}

fn strategy_of(s: Strategy) -> ResolutionStrategy {
    match s {
        Strategy::Naive => ResolutionStrategy::Naive,
        Strategy::Greedy => ResolutionStrategy::Greedy,
        Strategy::Minimal => ResolutionStrategy::Minimal,
    }
}

/// A dimension list from degree 0; must fit the truncation.
fn graded_literal(ctx: &Ctx, dims: &[usize], path: &str) -> Result<GradedSpace, JobError> {
    if dims.len() > ctx.truncation + 1 {
        return Err(invalid(
            path,
            format!("{} degrees given but truncation is {}", dims.len(), ctx.truncation),
        ));
    }
    Ok(GradedSpace::from_dims(ctx.truncation, dims))
}

fn build_algebra(ctx: &Ctx, spec: &AlgebraSpec, path: &str) -> Result<FDAlgebra, JobError> {
    let alg = match spec {
        AlgebraSpec::Preset(name) => {
            let preset: AlgebraPreset = name.parse().map_err(|e| invalid(path, e))?;
            if preset.p() != ctx.field.p() as u64 {
                return Err(invalid(
                    path,
                    format!("preset {preset} lives over GF({}), job field is GF({})", preset.p(), ctx.field.p()),
                ));
            }
            preset.build().map_err(|e| invalid(path, e))?
        }
        AlgebraSpec::Structure {
            dim,
            constants,
            unit,
            augmentation,
        } => {
            let alg = FDAlgebra::new(ctx.field, *dim, constants, unit).map_err(|e| invalid(path, e))?;
            match augmentation {
                Some(chi) => alg.augmented(chi).map_err(|e| invalid(path, e))?,
                None => alg,
            }
        }
    };
    Ok(alg)
}

fn build_module(
    ctx: &Ctx,
    alg: &FDAlgebra,
    side: Side,
    spec: &ModuleSpec,
    path: &str,
) -> Result<FDModule, JobError> {
    let f = ctx.field;
    let m = match spec {
        ModuleSpec::Preset(name) => match name.as_str() {
            "trivial" => FDModule::trivial(alg, side),
            "regular" => Ok(FDModule::regular(alg, side)),
            other => return Err(invalid(path, format!("unknown module preset `{other}` (trivial, regular)"))),
        },
        ModuleSpec::Character(chi) => FDModule::character(alg, side, chi),
        ModuleSpec::Quotient(gens) => {
            let gens: Vec<Vec<u32>> = gens
                .iter()
                .map(|g| g.iter().map(|&x| f.reduce(x)).collect())
                .collect();
            FDModule::regular_quotient(alg, side, &gens)
        }
        ModuleSpec::Action { dim, matrices } => {
            let mats = matrices
                .iter()
                .enumerate()
                .map(|(t, rows)| square_matrix(f, *dim, rows, &format!("{path}.matrices[{t}]")))
                .collect::<Result<Vec<_>, _>>()?;
            FDModule::new(alg, side, *dim, mats)
        }
    };
    m.map_err(|e| invalid(path, e))
}

fn square_matrix(f: PrimeField, dim: usize, rows: &[Vec<i64>], path: &str) -> Result<Matrix, JobError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(invalid(path, format!("expected a {dim}x{dim} matrix")));
    }
    let flat: Vec<i64> = rows.concat();
    Matrix::from_flat(f, dim, dim, &flat).map_err(|e| invalid(path, e))
}

fn module_tor(ctx: &Ctx, payload: &ModuleTorPayload, path: &str) -> Result<GradedSpace, JobError> {
    let alg = build_algebra(ctx, &payload.algebra, &format!("{path}.algebra"))?;
    let right = build_module(ctx, &alg, Side::Right, &payload.right, &format!("{path}.right"))?;
    let left = build_module(ctx, &alg, Side::Left, &payload.left, &format!("{path}.left"))?;
    let route = match payload.route {
        Route::First => TorRoute::ResolveFirst,
        Route::Second => TorRoute::ResolveSecond,
    };
    Ok(fdalg::tor(&alg, &right, &left, ctx.truncation, strategy_of(payload.strategy), route)?)
}

fn module_ext(ctx: &Ctx, payload: &ModuleExtPayload, path: &str) -> Result<GradedSpace, JobError> {
    let alg = build_algebra(ctx, &payload.algebra, &format!("{path}.algebra"))?;
    let side = match payload.side {
        SideSpec::Left => Side::Left,
        SideSpec::Right => Side::Right,
    };
    let source = build_module(ctx, &alg, side, &payload.source, &format!("{path}.source"))?;
    let target = build_module(ctx, &alg, side, &payload.target, &format!("{path}.target"))?;
    Ok(fdalg::ext(&alg, &source, &target, ctx.truncation, strategy_of(payload.strategy))?)
}

fn additive_tor(ctx: &Ctx, input: &AdditiveInput, path: &str) -> Result<(GradedSpace, Provenance), JobError> {
    Ok(match input {
        AdditiveInput::Dims(d) => (graded_literal(ctx, d, &format!("{path}.dims"))?, Provenance::default()),
        AdditiveInput::Modules(m) => (
            module_tor(ctx, m, &format!("{path}.modules"))?,
            Provenance::new(&[Fact::ModuleTor], &[]),
        ),
    })
}

fn additive_ext(ctx: &Ctx, input: &AdditiveExtInput, path: &str) -> Result<(GradedSpace, Provenance), JobError> {
    Ok(match input {
        AdditiveExtInput::Dims(d) => (graded_literal(ctx, d, &format!("{path}.dims"))?, Provenance::default()),
        AdditiveExtInput::Modules(m) => (
            module_ext(ctx, m, &format!("{path}.modules"))?,
            Provenance::new(&[Fact::ModuleExt], &[]),
        ),
    })
}

/// A functor Tor group and whether it went through the Tor comparison.
fn tor_entry(ctx: &Ctx, entry: &TorEntry, path: &str) -> Result<(Outcome, TorSource), JobError> {
    Ok(match entry {
        TorEntry::Additive(d) => (
            functor_calc::apply_corollary(&graded_literal(ctx, d, &format!("{path}.additive"))?),
            TorSource::Comparison,
        ),
        TorEntry::Modules(m) => {
            let out = functor_calc::apply_corollary(&module_tor(ctx, m, &format!("{path}.modules"))?);
            let provenance = out.provenance.with(Fact::ModuleTor);
            (Outcome { space: out.space, provenance }, TorSource::Comparison)
        }
        TorEntry::Functor(d) => (
            Outcome {
                space: graded_literal(ctx, d, &format!("{path}.functor"))?,
                provenance: Provenance::default().with_hypothesis(Hypothesis::UserSuppliedFunctorTor),
            },
            TorSource::UserSupplied,
        ),
    })
}

fn composition(parts: &[usize], path: &str) -> Result<YoungComposition, JobError> {
    YoungComposition::new(parts.to_vec()).map_err(|e| invalid(path, e))
}

/// Builds a representation; `expected` is the group the task requires, if
/// the task fixes one.
fn build_rep(
    ctx: &Ctx,
    spec: &RepSpec,
    expected: Option<&YoungComposition>,
    path: &str,
) -> Result<GroupRepresentation, JobError> {
    let declared = match (&spec.blocks, spec.d) {
        (Some(_), Some(_)) => return Err(invalid(path, "give either `blocks` or `d`, not both")),
        (Some(b), None) => Some(composition(b, &format!("{path}.blocks"))?),
        (None, Some(d)) => Some(YoungComposition::full(d)),
        (None, None) => None,
    };
    let group = match (declared, expected) {
        (Some(g), Some(e)) if &g != e => {
            return Err(invalid(path, format!("representation of {g}, but the task needs {e}")))
        }
        (Some(g), _) => g,
        (None, Some(e)) => e.clone(),
        (None, None) => return Err(invalid(path, "group unknown: give `d` or `blocks`")),
    };
    let f = ctx.field;
    match (&spec.preset, &spec.matrices) {
        (Some(name), None) => {
            if spec.dim.is_some() {
                return Err(invalid(path, "`dim` is only used with `matrices`"));
            }
            let rep = match name.as_str() {
                "trivial" => Ok(GroupRepresentation::trivial(group, f)),
                "sign" => Ok(GroupRepresentation::sign(group, f)),
                "regular" => GroupRepresentation::regular(group, f),
                "standard" => {
                    if group.parts().len() > 1 {
                        return Err(invalid(path, format!("standard needs a full symmetric group, got {group}")));
                    }
                    GroupRepresentation::standard(group.total(), f)
                }
                other => {
                    return Err(invalid(
                        path,
                        format!("unknown representation preset `{other}` (trivial, sign, standard, regular)"),
                    ))
                }
            };
            rep.map_err(|e| invalid(path, e))
        }
        (None, Some(mats)) => {
            let dim = spec.dim.ok_or_else(|| invalid(path, "`matrices` needs `dim`"))?;
            let gens = mats
                .iter()
                .enumerate()
                .map(|(k, rows)| square_matrix(f, dim, rows, &format!("{path}.matrices[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            GroupRepresentation::new(group, f, dim, gens).map_err(|e| invalid(path, e))
        }
        _ => Err(invalid(path, "give exactly one of `preset` or `matrices`")),
    }
}

fn tensor_functor(
    ctx: &Ctx,
    pi: &[usize],
    rho: &[usize],
    tor: &[Vec<TorEntry>],
    u: Option<&RepSpec>,
    v: Option<&RepSpec>,
) -> Result<ReportBody, JobError> {
    let pi = composition(pi, "task.pi")?;
    let rho = composition(rho, "task.rho")?;
    let (n, m) = (pi.parts().len(), rho.parts().len());
    if tor.len() != n || tor.iter().any(|row| row.len() != m) {
        return Err(invalid("task.tor", format!("expected a {n}x{m} table for pi = {pi}, rho = {rho}")));
    }
    let mut entries = Vec::with_capacity(n);
    let mut sources = Vec::with_capacity(n);
    let mut upstream = Provenance::default();
    for (a, row) in tor.iter().enumerate() {
        let mut e_row = Vec::with_capacity(m);
        let mut s_row = Vec::with_capacity(m);
        for (b, entry) in row.iter().enumerate() {
            let (out, source) = tor_entry(ctx, entry, &format!("task.tor[{a}][{b}]"))?;
            upstream = upstream.merge(&out.provenance);
            e_row.push(out.space);
            s_row.push(source);
        }
        entries.push(e_row);
        sources.push(s_row);
    }
    let matrix = AdditiveTorMatrix::new(pi.clone(), rho.clone(), entries, sources, ctx.truncation)
        .map_err(|e| invalid("task.tor", e))?;
    let trivial = RepSpec {
        preset: Some("trivial".into()),
        matrices: None,
        dim: None,
        d: None,
        blocks: None,
    };
    let u = build_rep(ctx, u.unwrap_or(&trivial), Some(&pi), "task.u")?;
    let v = build_rep(ctx, v.unwrap_or(&trivial), Some(&rho), "task.v")?;
    Ok(outcome(functor_calc::tensor_tor(&matrix, &u, &v, ctx.policy)?, Some(upstream)))
}
