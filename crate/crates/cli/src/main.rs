use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nhybe_core::algebra::{check_algebra, check_augmentation, check_bimodule, Algebra};
use nhybe_core::catalog::{catalog_algebra, verify_catalog, NAMES};
use nhybe_core::constructions::{
    lift_equivalence, lift_o_operator, r_from_rb, rb_from_r, thm_cons_build, unitization_branch,
    unitization_rb_extract, Construction,
};
use nhybe_core::dendriform::{check_dendriform, dendriform_solution_build, unital_extension, UnitConvention};
use nhybe_core::frobenius::{derive_lambda, frobenius_bridge_suite, frobenius_from_form, p_r, rb_system_suite, rbsystem_suite};
use nhybe_core::json::{
    parse_json, AlgebraJson, AugmentationJson, BilinearFormJson, BimoduleJson, CatalogExport, ConstructionJson,
    DendriformJson, LinearMapJson, ProductJson, Provenance, Tensor2Json,
};
use nhybe_core::operators::{check_o_operator, check_rota_baxter, pro_iff_suite, thm_key_suite, WeightOp};
use nhybe_core::random::{sample_invariant_tensors, sample_tensors};
use nhybe_core::report::CheckReport;
use nhybe_core::scalar::{self, Rational};
use nhybe_core::tensor::Tensor2;
use nhybe_core::ybe::{
    check_nhacybe, extended_symmetrizer, grid_enumerate_with_budget, invariant_symmetric_basis, is_invariant,
    is_symmetrized_invariant, normalize_grid, opposite_residual, residual_report, NhacybeInstance,
};

#[derive(Parser)]
#[command(name = "nhybe", version, about = "Exact checks and constructions for the nonhomogeneous associative Yang-Baxter equation")]
struct Cli {
    /// Format for verification reports.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Json)]
    report: ReportFormat,

    /// Worker threads for enumeration and catalog verification.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Algebra, bimodule and augmentation axioms.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// The equation, symmetrizers, invariants and grid enumeration.
    #[command(subcommand)]
    Ybe(YbeCmd),
    /// Rota-Baxter and O-operator identities, and equivalence suites.
    #[command(subcommand)]
    Op(OpCmd),
    /// Frobenius forms, `P_r` and the Rota-Baxter bridge.
    #[command(subcommand)]
    Frobenius(FrobeniusCmd),
    /// Solutions built from operators, and operators extracted from solutions.
    #[command(subcommand)]
    Construct(ConstructCmd),
    #[command(subcommand)]
    Dendriform(DendriformCmd),
    /// Reference algebras of dimension 2 and 3 and their solution families.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Args)]
struct AlgebraArg {
    #[arg(long)]
    algebra: PathBuf,
}

#[derive(Args)]
struct MuArgs {
    /// Value of μ, as `p/q`. Repeat to check several values.
    #[arg(long = "mu", allow_hyphen_values = true)]
    mu: Vec<String>,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Check {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        bimodule: Option<PathBuf>,
        #[arg(long)]
        augmentation: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum YbeCmd {
    Check {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        r: PathBuf,
        #[command(flatten)]
        mu: MuArgs,
        /// Check the opposite form of the equation instead.
        #[arg(long)]
        opposite: bool,
    },
    Symmetrizer {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        r: PathBuf,
        #[command(flatten)]
        mu: MuArgs,
    },
    InvariantBasis {
        #[command(flatten)]
        a: AlgebraArg,
    },
    /// Stream every solution with coefficients in the grid as JSON lines.
    Enumerate {
        #[command(flatten)]
        a: AlgebraArg,
        #[command(flatten)]
        mu: MuArgs,
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u128,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// The equation and its four operator forms on the coadjoint bimodule.
    OperatorForms,
    /// Weight 0 / −1 forms for symmetrized invariant tensors.
    SymmetrizedInvariant,
    /// The equation and its operator forms through a Frobenius form.
    FrobeniusForms,
    /// At μ = 0: the equation versus the Rota-Baxter system `(P_r, −P_r^t)`.
    RbSystem,
    /// `r` solves the equation iff `σ(r)` solves the opposite one.
    Opposite,
}

#[derive(Subcommand)]
enum OpCmd {
    RbCheck {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Weight zero unless both `--lambda` and `--product` are given.
    OCheck {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        bimodule: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        product: Option<PathBuf>,
    },
    /// Run an equivalence suite on one tensor or on seeded samples and
    /// report any disagreement among the equivalent statements.
    Suite {
        #[command(flatten)]
        a: AlgebraArg,
        #[command(flatten)]
        mu: MuArgs,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        r: Option<PathBuf>,
        #[arg(long)]
        form: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum FrobeniusCmd {
    Build {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        form: PathBuf,
    },
    Pr {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Without `--lambda`, the weight is read off `s̄ = −λφ`.
    Bridge {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[command(flatten)]
        mu: MuArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Two solutions from a symmetric invariant `s` and a Rota-Baxter operator.
    FromRb {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        mu: MuArgs,
    },
    /// The Rota-Baxter pair of a solution with nondegenerate invariant `s`.
    ToRb {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        mu: MuArgs,
    },
    Lift {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        bimodule: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    ThmCons {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        bimodule: PathBuf,
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        beta: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        mu: MuArgs,
    },
    UnitizeExtract {
        #[command(flatten)]
        a: AlgebraArg,
        #[arg(long)]
        augmentation: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[command(flatten)]
        mu: MuArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    PrecUnit,
    SuccUnit,
}

impl From<Convention> for UnitConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::PrecUnit => UnitConvention::PrecUnit,
            Convention::SuccUnit => UnitConvention::SuccUnit,
        }
    }
}

#[derive(Subcommand)]
enum DendriformCmd {
    Check {
        #[arg(long)]
        dendriform: PathBuf,
    },
    /// Solutions in the unital extension from a balanced `β`.
    Build {
        #[arg(long)]
        dendriform: PathBuf,
        #[arg(long)]
        beta: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        mu: MuArgs,
        #[arg(long, value_enum, default_value_t = Convention::PrecUnit)]
        convention: Convention,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Export {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        mu: MuArgs,
    },
    Verify {
        /// Catalog name; repeat for several, or `all`.
        #[arg(long)]
        name: Vec<String>,
        #[command(flatten)]
        mu: MuArgs,
    },
}

/// What a command produced: a verdict to print, or plain data.
enum Output {
    Report(CheckReport),
    Data(Value),
    Both(Value, CheckReport),
    /// Already streamed to standard output.
    Streamed,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_algebra(a: &AlgebraArg) -> anyhow::Result<Algebra> {
    Ok(read_json::<AlgebraJson>(&a.algebra)?.to_algebra()?)
}

fn load_tensor(path: &Path) -> anyhow::Result<Tensor2> {
    Ok(read_json::<Tensor2Json>(path)?.to_tensor()?)
}

fn load_map(path: &Path) -> anyhow::Result<nhybe_core::linalg::LinearMap> {
    Ok(read_json::<LinearMapJson>(path)?.to_map()?)
}

fn rational(text: &str) -> anyhow::Result<Rational> {
    Ok(scalar::parse(text)?)
}

impl MuArgs {
    fn values(&self) -> anyhow::Result<Vec<Rational>> {
        self.mu.iter().map(|m| rational(m)).collect()
    }

    fn single(&self) -> anyhow::Result<Rational> {
        match self.mu.as_slice() {
            [one] => rational(one),
            [] => bail!("--mu is required"),
            _ => bail!("this command takes a single --mu"),
        }
    }
}

fn tensor_json(r: &Tensor2) -> Value {
    serde_json::to_value(Tensor2Json::from_tensor(r)).expect("serializable")
}

fn map_json(m: &nhybe_core::linalg::LinearMap) -> Value {
    serde_json::to_value(LinearMapJson::from_map(m)).expect("serializable")
}

fn per_mu(mus: &[Rational], mut f: impl FnMut(&Rational) -> anyhow::Result<CheckReport>) -> anyhow::Result<CheckReport> {
    if mus.is_empty() {
        bail!("at least one --mu is required");
    }
    if let [mu] = mus {
        return f(mu);
    }
    let children = mus
        .iter()
        .map(|mu| {
            let mut c = f(mu)?;
            c.name = format!("{} (μ = {})", c.name, scalar::format(mu));
            Ok(c)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(CheckReport::all("all values of μ", children))
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Algebra(AlgebraCmd::Check { a, bimodule, augmentation }) => {
            let alg = load_algebra(&a)?;
            let mut children = vec![check_algebra(&alg)];
            if let Some(p) = bimodule {
                let v = read_json::<BimoduleJson>(&p)?.to_bimodule(&alg)?;
                children.push(check_bimodule(&v));
            }
            if let Some(p) = augmentation {
                let e = read_json::<AugmentationJson>(&p)?.to_augmentation()?;
                children.push(check_augmentation(&alg, &e));
            }
            if children.len() == 1 {
                Ok(Output::Report(children.remove(0)))
            } else {
                Ok(Output::Report(CheckReport::all("algebra data", children)))
            }
        }
        Command::Ybe(cmd) => run_ybe(cmd),
        Command::Op(cmd) => run_op(cmd),
        Command::Frobenius(cmd) => run_frobenius(cmd),
        Command::Construct(cmd) => run_construct(cmd),
        Command::Dendriform(cmd) => run_dendriform(cmd),
        Command::Catalog(cmd) => run_catalog(cmd),
    }
}

fn run_ybe(cmd: YbeCmd) -> anyhow::Result<Output> {
    match cmd {
        YbeCmd::Check { a, r, mu, opposite } => {
            let alg = load_algebra(&a)?;
            let r = load_tensor(&r)?;
            let report = per_mu(&mu.values()?, |m| {
                let inst = NhacybeInstance::new(alg.clone(), m.clone());
                if opposite {
                    let res = opposite_residual(&inst, &r)?;
                    Ok(residual_report("opposite equation", "r13 r12 + r23 r13 − r12 r23 = μ r13", &res))
                } else {
                    Ok(check_nhacybe(&inst, &r)?)
                }
            })?;
            Ok(Output::Report(report))
        }
        YbeCmd::Symmetrizer { a, r, mu } => {
            let alg = load_algebra(&a)?;
            let r = load_tensor(&r)?;
            let inst = NhacybeInstance::new(alg.clone(), mu.single()?);
            let sbar = extended_symmetrizer(&inst, &r);
            let inv = is_invariant(&alg, &sbar).passed();
            Ok(Output::Data(json!({
                "mu": scalar::format(&inst.mu),
                "sbar": tensor_json(&sbar),
                "invariant": inv,
            })))
        }
        YbeCmd::InvariantBasis { a } => {
            let alg = load_algebra(&a)?;
            let basis: Vec<Value> = invariant_symmetric_basis(&alg).iter().map(tensor_json).collect();
            Ok(Output::Data(json!({ "dim": basis.len(), "basis": basis })))
        }
        YbeCmd::Enumerate { a, mu, grid, budget } => {
            let alg = load_algebra(&a)?;
            let values = normalize_grid(&scalar::parse_list(&grid)?);
            if values.is_empty() {
                bail!("--grid must list at least one value");
            }
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for m in mu.values()? {
                let inst = NhacybeInstance::new(alg.clone(), m.clone());
                for r in grid_enumerate_with_budget(&inst, &values, budget)? {
                    let line = json!({
                        "mu": scalar::format(&m),
                        "r": tensor_json(&r),
                        "zero": r.is_zero(),
                        "symmetrized_invariant": is_symmetrized_invariant(&inst, &r).passed(),
                    });
                    writeln!(out, "{line}")?;
                }
            }
            Ok(Output::Streamed)
        }
    }
}

/// Pool of known solutions to mix into random samples.
fn solution_pool(inst: &NhacybeInstance) -> Vec<Tensor2> {
    let grid = if num_traits::Zero::is_zero(&inst.mu) {
        vec![scalar::int(-1), scalar::int(0), scalar::int(1)]
    } else {
        vec![scalar::int(0), inst.mu.clone()]
    };
    grid_enumerate_with_budget(inst, &normalize_grid(&grid), 1 << 17).unwrap_or_default()
}

fn run_suite(
    alg: &Algebra,
    mu: &Rational,
    suite: Suite,
    form: Option<&nhybe_core::frobenius::FrobeniusStructure>,
    samples: &[Tensor2],
) -> anyhow::Result<CheckReport> {
    let inst = NhacybeInstance::new(alg.clone(), mu.clone());
    let mut disagreements = Vec::new();
    let mut holding = 0usize;
    for (i, r) in samples.iter().enumerate() {
        let report = match suite {
            Suite::OperatorForms => pro_iff_suite(&inst, r)?,
            Suite::SymmetrizedInvariant => thm_key_suite(&inst, r)?,
            Suite::FrobeniusForms => rbsystem_suite(form.ok_or_else(|| anyhow!("--form is required"))?, mu, r)?,
            Suite::RbSystem => {
                if !num_traits::Zero::is_zero(mu) {
                    bail!("the Rota-Baxter system suite needs μ = 0");
                }
                rb_system_suite(form.ok_or_else(|| anyhow!("--form is required"))?, r)?
            }
            Suite::Opposite => {
                let direct = check_nhacybe(&inst, r)?;
                let opp = residual_report("opposite equation for σ(r)", "", &opposite_residual(&inst, &r.flip())?);
                CheckReport::agreement("equation versus opposite of σ(r)", vec![direct, opp])
            }
        };
        if report.verdict == Some(true) {
            holding += 1;
        }
        if !report.passed() {
            let mut c = report;
            c.name = format!("sample {i}: {}", c.name);
            disagreements.push(c);
        }
    }
    let failing = samples.len() - holding - disagreements.len();
    Ok(
        CheckReport::all("equivalence suite", disagreements).with_note(format!(
            "{} samples, {} where the statements hold, {} where they fail",
            samples.len(),
            holding,
            failing
        )),
    )
}

fn run_op(cmd: OpCmd) -> anyhow::Result<Output> {
    match cmd {
        OpCmd::RbCheck { a, map, lambda } => {
            let alg = load_algebra(&a)?;
            let p = load_map(&map)?;
            Ok(Output::Report(check_rota_baxter(&alg, &p.matrix, &rational(&lambda)?)))
        }
        OpCmd::OCheck { a, bimodule, map, lambda, product } => {
            let alg = load_algebra(&a)?;
            let v = read_json::<BimoduleJson>(&bimodule)?.to_bimodule(&alg)?;
            let alpha = load_map(&map)?;
            let weight = match (lambda, product) {
                (None, None) => WeightOp::Zero,
                (Some(l), Some(p)) => WeightOp::Scalar {
                    lambda: rational(&l)?,
                    product: read_json::<ProductJson>(&p)?.to_sc()?,
                },
                _ => bail!("--lambda and --product must be given together"),
            };
            Ok(Output::Report(check_o_operator(&v, &alpha, &weight)?))
        }
        OpCmd::Suite { a, mu, suite, r, form, seed, count } => {
            let alg = load_algebra(&a)?;
            let form = match form {
                Some(p) => Some(frobenius_from_form(&alg, &read_json::<BilinearFormJson>(&p)?.to_form()?)?),
                None => None,
            };
            let given = r.map(|p| load_tensor(&p)).transpose()?;
            let report = per_mu(&mu.values()?, |m| {
                let inst = NhacybeInstance::new(alg.clone(), m.clone());
                let samples = match (&given, suite) {
                    (Some(r), _) => vec![r.clone()],
                    (None, Suite::SymmetrizedInvariant) => {
                        let pool: Vec<Tensor2> = solution_pool(&inst)
                            .into_iter()
                            .filter(|r| is_symmetrized_invariant(&inst, r).passed())
                            .collect();
                        sample_invariant_tensors(seed, &inst, &pool, count)
                    }
                    (None, _) => sample_tensors(seed, &solution_pool(&inst), alg.dim(), count),
                };
                run_suite(&alg, m, suite, form.as_ref(), &samples)
            })?;
            Ok(Output::Report(report))
        }
    }
}

fn run_frobenius(cmd: FrobeniusCmd) -> anyhow::Result<Output> {
    match cmd {
        FrobeniusCmd::Build { a, form } => {
            let alg = load_algebra(&a)?;
            let f = frobenius_from_form(&alg, &read_json::<BilinearFormJson>(&form)?.to_form()?)?;
            Ok(Output::Data(json!({
                "gram": nhybe_core::json::matrix_rows(&f.form.gram),
                "phi": tensor_json(&f.phi),
                "symmetric": f.form.is_symmetric(),
            })))
        }
        FrobeniusCmd::Pr { a, form, r } => {
            let alg = load_algebra(&a)?;
            let f = frobenius_from_form(&alg, &read_json::<BilinearFormJson>(&form)?.to_form()?)?;
            let (p, pt) = p_r(&f, &load_tensor(&r)?)?;
            Ok(Output::Data(json!({ "p": map_json(&p), "pt": map_json(&pt) })))
        }
        FrobeniusCmd::Bridge { a, form, r, mu, lambda } => {
            let alg = load_algebra(&a)?;
            let f = frobenius_from_form(&alg, &read_json::<BilinearFormJson>(&form)?.to_form()?)?;
            let r = load_tensor(&r)?;
            let mu = mu.single()?;
            let lambda = match lambda {
                Some(l) => rational(&l)?,
                None => derive_lambda(&f, &mu, &r).ok_or_else(|| anyhow!("s̄ is not a multiple of φ"))?,
            };
            Ok(Output::Report(frobenius_bridge_suite(&f, &mu, &lambda, &r)?))
        }
    }
}

fn construction_output(c: &Construction, provenance: Provenance, mu: &Rational) -> Output {
    let inst = NhacybeInstance::new(c.algebra.clone(), mu.clone());
    let check = |r: &Tensor2, name: &str| -> CheckReport {
        match check_nhacybe(&inst, r) {
            Ok(mut rep) => {
                rep.name = name.into();
                rep
            }
            Err(e) => CheckReport::pass(name).with_note(e.to_string()),
        }
    };
    let report = CheckReport::all("constructed solutions", vec![check(&c.r1, "r1"), check(&c.r2, "r2")]);
    let data = serde_json::to_value(ConstructionJson::from_construction(c, provenance)).expect("serializable");
    Output::Both(data, report)
}

fn run_construct(cmd: ConstructCmd) -> anyhow::Result<Output> {
    match cmd {
        ConstructCmd::FromRb { a, s, map, lambda, mu } => {
            let alg = load_algebra(&a)?;
            let s = load_tensor(&s)?;
            let p = load_map(&map)?;
            let (lambda, mu) = (rational(&lambda)?, mu.single()?);
            let (r1, r2) = r_from_rb(&alg, &s, &p, &lambda, &mu)?;
            let c = Construction { algebra: alg, s, r1, r2 };
            let prov = Provenance::new("solutions from a Rota-Baxter operator")
                .input("lambda", scalar::format(&lambda))
                .input("mu", scalar::format(&mu))
                .input("operator", LinearMapJson::from_map(&p));
            Ok(construction_output(&c, prov, &mu))
        }
        ConstructCmd::ToRb { a, s, r, lambda, mu } => {
            let alg = load_algebra(&a)?;
            let (lambda, mu) = (rational(&lambda)?, mu.single()?);
            let (p, pt) = rb_from_r(&alg, &load_tensor(&s)?, &load_tensor(&r)?, &lambda, &mu)?;
            let report = CheckReport::all(
                "extracted operators",
                vec![
                    named(check_rota_baxter(&alg, &p.matrix, &lambda), "P Rota-Baxter"),
                    named(check_rota_baxter(&alg, &pt.matrix, &lambda), "P^t Rota-Baxter"),
                ],
            );
            Ok(Output::Both(json!({ "p": map_json(&p), "pt": map_json(&pt) }), report))
        }
        ConstructCmd::Lift { a, bimodule, map, lambda } => {
            let alg = load_algebra(&a)?;
            let v = read_json::<BimoduleJson>(&bimodule)?.to_bimodule(&alg)?;
            let alpha = load_map(&map)?;
            let lambda = rational(&lambda)?;
            let lifted = lift_o_operator(&v, &alpha, &lambda)?;
            let report = lift_equivalence(&v, &alpha, &lambda)?;
            Ok(Output::Both(
                json!({
                    "semidirect": AlgebraJson::from_algebra(&lifted.semidirect),
                    "hat_alpha": map_json(&lifted.hat_alpha),
                    "lambda": scalar::format(&lambda),
                }),
                report,
            ))
        }
        ConstructCmd::ThmCons { a, bimodule, alpha, beta, lambda, mu } => {
            let alg = load_algebra(&a)?;
            let v = read_json::<BimoduleJson>(&bimodule)?.to_bimodule(&alg)?;
            let (alpha, beta) = (load_map(&alpha)?, load_map(&beta)?);
            let (lambda, mu) = (rational(&lambda)?, mu.single()?);
            let c = thm_cons_build(&v, &alpha, &beta, &lambda, &mu)?;
            let prov = Provenance::new("solutions from an O-operator and a balanced homomorphism")
                .input("lambda", scalar::format(&lambda))
                .input("mu", scalar::format(&mu))
                .input("alpha", LinearMapJson::from_map(&alpha))
                .input("beta", LinearMapJson::from_map(&beta));
            Ok(construction_output(&c, prov, &mu))
        }
        ConstructCmd::UnitizeExtract { a, augmentation, r, mu } => {
            let alg = load_algebra(&a)?;
            let eps = read_json::<AugmentationJson>(&augmentation)?.to_augmentation()?;
            let r = load_tensor(&r)?;
            let mu = mu.single()?;
            let (p, pp) = unitization_rb_extract(&alg, &eps, &r)?;
            let (branch, report) = unitization_branch(&alg, &eps, &r, &mu)?;
            Ok(Output::Both(
                json!({ "p": map_json(&p), "p_prime": map_json(&pp), "branch": format!("{branch:?}") }),
                report,
            ))
        }
    }
}

fn named(mut c: CheckReport, name: &str) -> CheckReport {
    c.name = name.into();
    c
}

fn run_dendriform(cmd: DendriformCmd) -> anyhow::Result<Output> {
    match cmd {
        DendriformCmd::Check { dendriform } => {
            let d = read_json::<DendriformJson>(&dendriform)?.to_dendriform()?;
            Ok(Output::Report(check_dendriform(&d)))
        }
        DendriformCmd::Build { dendriform, beta, lambda, mu, convention } => {
            let d = read_json::<DendriformJson>(&dendriform)?.to_dendriform()?;
            let beta_map = load_map(&beta)?;
            let (lambda, mu) = (rational(&lambda)?, mu.single()?);
            let (_, u) = unital_extension(&d)?;
            let c = dendriform_solution_build(&u, &beta_map, &lambda, &mu, convention.into())?;
            let prov = Provenance::new("solutions from a unital dendriform algebra")
                .input("lambda", scalar::format(&lambda))
                .input("mu", scalar::format(&mu))
                .input("convention", UnitConvention::from(convention))
                .input("beta", LinearMapJson::from_map(&beta_map));
            Ok(construction_output(&c, prov, &mu))
        }
    }
}

fn run_catalog(cmd: CatalogCmd) -> anyhow::Result<Output> {
    match cmd {
        CatalogCmd::List => {
            let entries = NAMES
                .iter()
                .map(|n| {
                    let e = catalog_algebra(n)?;
                    Ok(json!({
                        "name": e.name,
                        "dim": e.algebra.dim(),
                        "basis": e.algebra.basis,
                        "solutions": e.solutions.len(),
                        "augmentations": e.augmentations.len(),
                    }))
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            Ok(Output::Data(Value::Array(entries)))
        }
        CatalogCmd::Export { name, mu } => {
            let e = catalog_algebra(&name)?;
            let export = CatalogExport::new(&e, &mu.single()?)?;
            Ok(Output::Data(serde_json::to_value(export)?))
        }
        CatalogCmd::Verify { name, mu } => {
            let mut mus = mu.values()?;
            if mus.is_empty() {
                mus.push(scalar::int(1));
            }
            let names: Vec<String> = if name.is_empty() || name.iter().any(|n| n == "all") {
                NAMES.iter().map(|s| s.to_string()).collect()
            } else {
                name
            };
            let mut reports = names
                .iter()
                .map(|n| Ok(verify_catalog(n, &mus)?))
                .collect::<anyhow::Result<Vec<_>>>()?;
            if reports.len() == 1 {
                Ok(Output::Report(reports.remove(0)))
            } else {
                Ok(Output::Report(CheckReport::all("catalog", reports)))
            }
        }
    }
}

fn print_report(report: &CheckReport, format: ReportFormat) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match format {
        ReportFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(report).expect("serializable")),
        ReportFormat::Text => write!(out, "{}", report.to_text()),
    }
}

fn emit(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.report;
    let output = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let passed = match output {
        Output::Report(r) => {
            let _ = print_report(&r, format);
            r.passed()
        }
        Output::Data(v) => {
            emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")));
            true
        }
        Output::Both(v, r) => {
            match format {
                ReportFormat::Json => {
                    let mut v = v;
                    v["report"] = serde_json::to_value(&r).expect("serializable");
                    emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")));
                }
                ReportFormat::Text => {
                    emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")));
                    emit(&r.to_text());
                }
            }
            r.passed()
        }
        Output::Streamed => true,
    };
    ExitCode::from(if passed { 0 } else { 1 })
}
