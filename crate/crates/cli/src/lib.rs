//! Command-line front end: argument parsing, dispatch into `sahi-kernels`,
//! and rendering of the results as JSON, CSV or text.

use std::sync::Once;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use sahi_kernels::gammaval::SignedValue;
use sahi_kernels::jack::jack_cached;
use sahi_kernels::kernel::{c_lambda, c_lambda_reduced, l_lambda, KernelSpec, Space};
use sahi_kernels::oracle::{
    gram_matrix, torus_integral_exact, torus_integral_numeric, GramMethod, QuadratureResult, QuadratureSpec,
};
use sahi_kernels::partitions::{partitions_of, Signature};
use sahi_kernels::positivity::{region_csv, region_grid, scan_sign_constancy, st_to_sigma_tau, RegionCell};
use sahi_kernels::scalar::{format_rational, parse_rational, Rational, Real};
use sahi_kernels::sobolev::{
    default_norm_quadrature, expand_in_jack, form_value, form_value_reduced, l2_degeneration_report,
};
use sahi_kernels::sympoly::parse_sym_poly;
use sahi_kernels::Error;

pub const THREADS_ENV: &str = "SAHI_KERNELS_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub exit_code: i32,
    #[serde(skip)]
    pub format: Format,
    /// Preformatted body for CSV and text output.
    #[serde(skip)]
    pub text: Option<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
            diagnostics: Vec::new(),
            exit_code: 0,
            format: Format::Json,
            text: None,
        }
    }

    fn failure(code: i32, message: String) -> Self {
        CommandResult {
            status: Status::Error,
            payload: json!({ "error": message }),
            diagnostics: vec![message],
            exit_code: code,
            format: Format::Json,
            text: None,
        }
    }

    /// Verification outcome: the payload is kept either way.
    fn verdict(payload: Value, passed: bool) -> Self {
        let mut r = CommandResult::ok(payload);
        if !passed {
            r.status = Status::Error;
            r.exit_code = 1;
            r.diagnostics.push("verification mismatch".into());
        }
        r
    }

    fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    pub fn render(&self) -> String {
        match (self.format, &self.text) {
            (Format::Json, _) | (_, None) => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            (_, Some(t)) => {
                let mut s = t.clone();
                for d in &self.diagnostics {
                    s.push_str(&format!("# {d}\n"));
                }
                s
            }
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "sahi-kernels",
    version,
    about = "Jack polynomials and determinant-kernel eigenvalues"
)]
struct Cli {
    /// Output format; defaults to text for `jack`, CSV for `region`, JSON otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jack polynomial in the monomial basis.
    Jack(JackArgs),
    /// Kernel eigenvalue c_λ.
    Eigen(EigenArgs),
    /// Sign scan of c_λ over a box of signatures.
    Scan(ScanArgs),
    /// Closed-form predicate and scan verdict on an (s, t) grid.
    Region(RegionArgs),
    /// Closed form against torus quadrature.
    Verify(VerifyArgs),
    /// Closed form against the exact constant term.
    VerifyExact(VerifyExactArgs),
    /// Gram matrix of Jack polynomials.
    Gram(GramArgs),
    /// Value of the invariant Hermitian form.
    Form(FormArgs),
    /// Ratio profile of c_λ on the line s = t.
    #[command(name = "l2-check")]
    L2Check(L2Args),
    /// The λ = 0 eigenvalue (Cauchy-type Selberg integral).
    Selberg(SelbergArgs),
}

fn parse_sig(s: &str) -> Result<Signature, Error> {
    s.parse()
}

fn parse_real(s: &str) -> Result<Real, Error> {
    s.parse()
}

fn parse_q(s: &str) -> Result<Rational, Error> {
    parse_rational(s)
}

fn parse_space(s: &str) -> Result<Space, Error> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(Rational, Rational), Error> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("range must look like lo:hi, got {s:?}")))?;
    Ok((parse_rational(a)?, parse_rational(b)?))
}

#[derive(Args, Debug)]
struct JackArgs {
    #[arg(long, value_parser = parse_sig, allow_hyphen_values = true)]
    lambda: Signature,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = parse_q)]
    kappa: Rational,
}

/// σ, τ given directly or through (s, t).
#[derive(Args, Debug)]
struct Params {
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true, requires = "tau", conflicts_with_all = ["s", "t"])]
    sigma: Option<Real>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true, requires = "sigma")]
    tau: Option<Real>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true, requires = "t")]
    s: Option<Real>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true, requires = "s")]
    t: Option<Real>,
}

impl Params {
    fn resolve(&self, space: Space, n: usize) -> Result<(Real, Real), Failure> {
        match (&self.sigma, &self.tau, &self.s, &self.t) {
            (Some(a), Some(b), _, _) => Ok((a.clone(), b.clone())),
            (_, _, Some(s), Some(t)) => Ok(st_to_sigma_tau(space, n, s, t)),
            _ => Err(Failure::Usage("give either --sigma/--tau or --s/--t".into())),
        }
    }
}

#[derive(Args, Debug)]
struct EigenArgs {
    #[arg(long, value_parser = parse_space)]
    space: Space,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: Params,
    #[arg(long, value_parser = parse_sig, allow_hyphen_values = true)]
    lambda: Signature,
    /// Drop the λ-independent prefactor.
    #[arg(long)]
    reduced: bool,
}

#[derive(Args, Debug)]
struct SelbergArgs {
    #[arg(long, value_parser = parse_space)]
    space: Space,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: Params,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, value_parser = parse_space)]
    space: Space,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: Params,
    #[arg(long = "box", default_value_t = 6)]
    box_radius: i64,
}

#[derive(Args, Debug)]
struct RegionArgs {
    #[arg(long, value_parser = parse_space)]
    space: Space,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    s_range: (Rational, Rational),
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    t_range: (Rational, Rational),
    #[arg(long, value_parser = parse_q, default_value = "1/4")]
    step: Rational,
    #[arg(long = "box", default_value_t = 6)]
    box_radius: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    Midpoint,
    Extrapolated,
    Qmc,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_q)]
    kappa: Rational,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    sigma: Real,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    tau: Real,
    #[arg(long, value_parser = parse_sig, allow_hyphen_values = true)]
    lambda: Signature,
    /// Points per dimension (total points for `qmc`).
    #[arg(long = "N", default_value_t = 1024)]
    points: usize,
    /// Defaults to `extrapolated` for n ≤ 2 and `qmc` above.
    #[arg(long, value_enum)]
    rule: Option<RuleArg>,
    #[arg(long, default_value_t = 3)]
    levels: usize,
    #[arg(long, default_value_t = 16)]
    shifts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Relative tolerance for a pass.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Args, Debug)]
struct VerifyExactArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_q)]
    kappa: Rational,
    #[arg(long)]
    sigma: i64,
    #[arg(long)]
    tau: i64,
    #[arg(long, value_parser = parse_sig, allow_hyphen_values = true)]
    lambda: Signature,
}

#[derive(Args, Debug)]
struct GramArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_q)]
    kappa: Rational,
    /// All partitions of every weight up to this one.
    #[arg(long, default_value_t = 2)]
    max_weight: i64,
    /// Exact constant terms (integer κ) or quadrature with this many points per dimension.
    #[arg(long = "N")]
    points: Option<usize>,
    #[arg(long, default_value_t = 3)]
    levels: usize,
    /// Largest accepted off-diagonal entry relative to the diagonal.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args, Debug)]
struct FormArgs {
    #[arg(long, value_parser = parse_space)]
    space: Space,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: Params,
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    #[arg(long)]
    reduced: bool,
}

#[derive(Args, Debug)]
struct L2Args {
    #[arg(long, value_parser = parse_space)]
    space: Space,
    #[arg(long)]
    n: usize,
    #[arg(long = "box", default_value_t = 4)]
    box_radius: i64,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::LengthMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<CommandResult, Failure>;

fn configure_threads() {
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        if let Some(k) = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            if k > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    });
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    configure_threads();
    let args = std::iter::once("sahi-kernels".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let mut r = CommandResult::ok(json!({ "help": text }));
                    r.format = Format::Text;
                    r.with_text(text)
                }
                _ => CommandResult::failure(2, text.trim_end().to_string()),
            };
        }
    };
    let is_region = matches!(cli.command, Command::Region(_));
    let default_format = match cli.command {
        Command::Jack(_) => Format::Text,
        Command::Region(_) => Format::Csv,
        _ => Format::Json,
    };
    let format = cli.format.unwrap_or(default_format);
    let outcome = match cli.command {
        Command::Jack(a) => cmd_jack(a),
        Command::Eigen(a) => cmd_eigen(a),
        Command::Selberg(a) => cmd_selberg(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Region(a) => cmd_region(a),
        Command::Verify(a) => cmd_verify(a),
        Command::VerifyExact(a) => cmd_verify_exact(a),
        Command::Gram(a) => cmd_gram(a),
        Command::Form(a) => cmd_form(a),
        Command::L2Check(a) => cmd_l2(a),
    };
    let mut r = match outcome {
        Ok(r) => r,
        Err(Failure::Usage(m)) => CommandResult::failure(2, m),
        Err(Failure::Domain(m)) => CommandResult::failure(1, m),
    };
    if format == Format::Csv && !is_region {
        return CommandResult::failure(2, "csv output is only available for `region`".into());
    }
    if r.text.is_none() && format == Format::Text {
        let body = serde_json::to_string_pretty(&r.payload).expect("serializable");
        r.text = Some(body + "\n");
    }
    r.format = format;
    r
}

fn pad_signature(lambda: Signature, n: Option<usize>) -> Result<Signature, Failure> {
    let Some(n) = n else { return Ok(lambda) };
    let mut parts = lambda.into_vec();
    if parts.len() > n {
        return Err(Failure::Usage(format!(
            "signature has {} parts but n = {n}",
            parts.len()
        )));
    }
    if parts.len() < n && parts.iter().any(|&p| p < 0) {
        return Err(Failure::Usage("only partitions are padded with zeros".into()));
    }
    parts.resize(n, 0);
    Ok(Signature::new(parts)?)
}

fn check_n(lambda: &Signature, n: usize) -> Result<(), Failure> {
    if lambda.len() != n {
        return Err(Failure::Usage(format!(
            "signature {lambda} has {} parts but n = {n}",
            lambda.len()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JackReport {
    pub lambda: Signature,
    pub n: usize,
    pub kappa: String,
    pub polynomial: String,
    pub eval_at_ones: String,
}

fn cmd_jack(a: JackArgs) -> Outcome {
    let lambda = pad_signature(a.lambda, a.n)?;
    if a.kappa <= Rational::from_integer(0.into()) {
        return Err(Failure::Domain("kappa must be positive".into()));
    }
    let p = jack_cached(&lambda, &a.kappa)?;
    let report = JackReport {
        n: lambda.len(),
        lambda,
        kappa: format_rational(&a.kappa),
        polynomial: p.to_string(),
        eval_at_ones: format_rational(&p.eval_at_ones()),
    };
    let text = format!("{}\nP(1^{}) = {}\n", report.polynomial, report.n, report.eval_at_ones);
    Ok(CommandResult::ok(serde_json::to_value(&report)?).with_text(text))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenReport {
    pub spec: KernelSpec,
    pub lambda: Signature,
    pub reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(flatten)]
    pub value: SignedValue,
}

fn eigen_report(spec: KernelSpec, lambda: Signature, reduced: bool, note: Option<String>) -> Outcome {
    check_n(&lambda, spec.n)?;
    let value = if reduced {
        c_lambda_reduced(&lambda, &spec)?
    } else {
        c_lambda(&lambda, &spec)?
    };
    let text = format!("{value}\n");
    let report = EigenReport {
        spec,
        lambda,
        reduced,
        note,
        value,
    };
    Ok(CommandResult::ok(serde_json::to_value(&report)?).with_text(text))
}

fn cmd_eigen(a: EigenArgs) -> Outcome {
    let (sigma, tau) = a.params.resolve(a.space, a.n)?;
    eigen_report(KernelSpec::new(a.space, a.n, sigma, tau), a.lambda, a.reduced, None)
}

fn cmd_selberg(a: SelbergArgs) -> Outcome {
    let (sigma, tau) = a.params.resolve(a.space, a.n)?;
    eigen_report(
        KernelSpec::new(a.space, a.n, sigma, tau),
        Signature::zero(a.n),
        false,
        Some("Cauchy-type form of the Selberg integral: the lambda = 0 eigenvalue".into()),
    )
}

fn cmd_scan(a: ScanArgs) -> Outcome {
    let (sigma, tau) = a.params.resolve(a.space, a.n)?;
    let spec = KernelSpec::new(a.space, a.n, sigma, tau);
    let report = scan_sign_constancy(&spec, a.box_radius)?;
    let text = format!("{}\n", report.verdict);
    Ok(CommandResult::ok(serde_json::to_value(&report)?).with_text(text))
}

fn cmd_region(a: RegionArgs) -> Outcome {
    let cells: Vec<RegionCell> = region_grid(a.space, a.n, a.s_range, a.t_range, &a.step, a.box_radius)?;
    let disagreements = cells.iter().filter(|c| c.agrees() == Some(false)).count();
    let csv = region_csv(&cells);
    let mut r = CommandResult::ok(serde_json::to_value(&cells)?).with_text(csv);
    if disagreements > 0 {
        r.diagnostics.push(format!(
            "{disagreements} cells where the scan and the predicate disagree"
        ));
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub lambda: Signature,
    pub kappa: String,
    pub sigma: Real,
    pub tau: Real,
    pub closed_form: SignedValue,
    pub quadrature: QuadratureResult,
    pub rel_err: f64,
    pub error_estimate: f64,
    pub passed: bool,
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    check_n(&a.lambda, a.n)?;
    let rule = a
        .rule
        .unwrap_or(if a.n <= 2 { RuleArg::Extrapolated } else { RuleArg::Qmc });
    let quad = match rule {
        RuleArg::Midpoint => QuadratureSpec::midpoint(a.n, a.points),
        RuleArg::Extrapolated => QuadratureSpec::extrapolated(a.n, a.points, a.levels),
        RuleArg::Qmc => QuadratureSpec::quasi_monte_carlo(a.n, a.points, a.shifts, a.seed),
    };
    let closed = l_lambda(&a.lambda, &a.kappa, &a.sigma, &a.tau)?;
    let q = torus_integral_numeric(&a.lambda, &a.kappa, a.sigma.to_f64(), a.tau.to_f64(), &quad)?;
    let c = closed.to_f64();
    let diff = (q.value() - Complex::new(c, 0.0)).norm();
    let rel_err = if c == 0.0 { diff } else { diff / c.abs() };
    let passed = rel_err < a.tol || q.std_error.is_some_and(|se| diff <= 3.0 * se);
    let mut diagnostics = q.warnings.clone();
    if let Some(se) = q.std_error {
        diagnostics.push(format!("randomized rule: standard error {se:e}"));
    }
    let report = VerifyReport {
        lambda: a.lambda,
        kappa: format_rational(&a.kappa),
        sigma: a.sigma,
        tau: a.tau,
        closed_form: closed,
        error_estimate: q.error_estimate,
        quadrature: q,
        rel_err,
        passed,
    };
    let mut r = CommandResult::verdict(serde_json::to_value(&report)?, passed);
    r.diagnostics.extend(diagnostics);
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyExactReport {
    pub lambda: Signature,
    pub kappa: String,
    pub sigma: i64,
    pub tau: i64,
    /// Closed form divided by `(2π)^n`.
    pub closed_form_rational: String,
    pub constant_term_rational: String,
    pub equal: bool,
}

fn cmd_verify_exact(a: VerifyExactArgs) -> Outcome {
    check_n(&a.lambda, a.n)?;
    let closed = l_lambda(&a.lambda, &a.kappa, &Real::int(a.sigma), &Real::int(a.tau))?;
    let ct = torus_integral_exact(&a.lambda, &a.kappa, a.sigma, a.tau)?;
    let n = a.n as i32;
    let closed_q = match &closed.exact {
        Some(e) if e.is_zero() => Rational::from_integer(0.into()),
        Some(e) if e.two_pi_power == n => e.coeff.clone(),
        _ => {
            return Err(Failure::Domain(format!(
                "closed form {closed} is not an exact rational multiple of (2*pi)^{n}"
            )))
        }
    };
    let equal = closed_q == ct;
    let report = VerifyExactReport {
        lambda: a.lambda,
        kappa: format_rational(&a.kappa),
        sigma: a.sigma,
        tau: a.tau,
        closed_form_rational: format_rational(&closed_q),
        constant_term_rational: format_rational(&ct),
        equal,
    };
    Ok(CommandResult::verdict(serde_json::to_value(&report)?, equal))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramReport {
    pub n: usize,
    pub kappa: String,
    pub method: GramMethod,
    pub lambdas: Vec<Signature>,
    pub matrix: Vec<Vec<SignedValue>>,
    /// Largest `|G_ij| / sqrt(G_ii G_jj)` over `i ≠ j`.
    pub max_off_diagonal: f64,
}

fn cmd_gram(a: GramArgs) -> Outcome {
    let lambdas: Vec<Signature> = (0..=a.max_weight).flat_map(|w| partitions_of(w, a.n)).collect();
    let method = match a.points {
        None if a.kappa.is_integer() => GramMethod::Exact,
        None => return Err(Failure::Usage("non-integer kappa needs --N for quadrature".into())),
        Some(pts) => GramMethod::Numeric(QuadratureSpec::extrapolated(a.n, pts, a.levels)),
    };
    let matrix = gram_matrix(&lambdas, a.n, &a.kappa, &method)?;
    let mut worst: f64 = 0.0;
    let mut exact_zero = true;
    for i in 0..lambdas.len() {
        for j in 0..lambdas.len() {
            if i == j {
                continue;
            }
            let g = &matrix[i][j];
            exact_zero &= g.is_zero();
            let scale = (matrix[i][i].to_f64() * matrix[j][j].to_f64()).abs().sqrt();
            worst = worst.max(g.to_f64().abs() / scale);
        }
    }
    let passed = match method {
        GramMethod::Exact => exact_zero,
        GramMethod::Numeric(_) => worst < a.tol,
    };
    let report = GramReport {
        n: a.n,
        kappa: format_rational(&a.kappa),
        method,
        lambdas,
        matrix,
        max_off_diagonal: worst,
    };
    Ok(CommandResult::verdict(serde_json::to_value(&report)?, passed))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormReport {
    pub spec: KernelSpec,
    pub f: String,
    pub g: String,
    pub reduced: bool,
    pub re: f64,
    pub im: f64,
}

fn cmd_form(a: FormArgs) -> Outcome {
    let (sigma, tau) = a.params.resolve(a.space, a.n)?;
    let spec = KernelSpec::new(a.space, a.n, sigma, tau);
    let f = expand_in_jack(&parse_sym_poly(&a.f, a.n)?, &spec.kappa)?.to_complex();
    let g = expand_in_jack(&parse_sym_poly(&a.g, a.n)?, &spec.kappa)?.to_complex();
    let quad = default_norm_quadrature(a.n);
    let v = if a.reduced {
        form_value_reduced(&f, &g, &spec, &quad)?
    } else {
        form_value(&f, &g, &spec, &quad)?
    };
    let report = FormReport {
        spec,
        f: a.f,
        g: a.g,
        reduced: a.reduced,
        re: v.re,
        im: v.im,
    };
    Ok(CommandResult::ok(serde_json::to_value(&report)?))
}

fn cmd_l2(a: L2Args) -> Outcome {
    let report = l2_degeneration_report(a.space, a.n, a.box_radius)?;
    let passed = report.passed;
    Ok(CommandResult::verdict(serde_json::to_value(&report)?, passed))
}
