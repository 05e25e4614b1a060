//! Command-line front end. `run` is the whole program; the binary only wires
//! it to the process streams.
//!
//! Exit codes: 0 success (every identity holds), 1 some identity failed,
//! 2 usage error or a request the library rejects.

use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::coxeter::{
    classify_i2, correlator_recursion_a, obstruction_check, open_family, potential_coxeter, Branch,
    CoxeterGroup,
};
use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, MPoly};
use crate::milnor::Family;
use crate::openext::{
    check_coefw_lemma, check_dn_second_derivative_identity, check_foan_relation, omega_sequence,
    open_potential_a, open_potential_d, verify_extension_theorems, verify_open_wdvv,
    verify_vector_potential, OpenExtension,
};
use crate::report::Report;
use crate::saito::{saito_structure, verify_homogeneity, verify_wdvv};

#[derive(Parser, Debug)]
#[command(name = "frobenius", version, about = "Exact Frobenius potentials and open WDVV solutions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::Plus => Branch::Plus,
            BranchArg::Minus => Branch::Minus,
        }
    }
}

/// A group given either as one token (`D4`, `I2(5)`, `F4`) or as a family
/// tag followed by a number (`D 4`, `I2 5`).
#[derive(Args, Debug)]
struct GroupArg {
    group: String,
    n: Option<usize>,
}

impl GroupArg {
    fn resolve(&self) -> Result<CoxeterGroup> {
        match self.n {
            Some(n) => CoxeterGroup::from_parts(&self.group, n),
            None => CoxeterGroup::from_str(&self.group),
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Closed potential F of a Coxeter group.
    Potential {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        c: Common,
    },
    /// Open potential F° (A, D, B, I2).
    OpenPotential {
        #[command(flatten)]
        g: GroupArg,
        /// Rescaling λ as an exact rational `p/q`.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "plus")]
        branch: BranchArg,
        #[command(flatten)]
        c: Common,
    },
    /// Flat coordinates t^α(v) for A or D.
    FlatCoords {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        c: Common,
    },
    /// Inverse coordinates v_α(t) for A or D.
    InvertCoords {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        c: Common,
    },
    /// Open A_N correlators from the splitting recursion.
    Correlators {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[command(flatten)]
        c: Common,
    },
    /// Check an identity; exits 1 when it fails.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Solve the general homogeneous I2(k) open ansatz.
    Classify {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, value_enum)]
        branch: Option<BranchArg>,
        #[command(flatten)]
        c: Common,
    },
    /// Nonexistence computations for D, E, F4, H3, H4.
    Obstruction {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        c: Common,
    },
}

#[derive(Args, Debug)]
struct OpenArgs {
    #[command(flatten)]
    g: GroupArg,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value = "plus")]
    branch: BranchArg,
    #[command(flatten)]
    c: Common,
}

#[derive(Args, Debug)]
struct GroupOnly {
    #[command(flatten)]
    g: GroupArg,
    #[command(flatten)]
    c: Common,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Closed WDVV.
    Wdvv(GroupOnly),
    /// Quasi-homogeneity of F (and of F° where one exists).
    Homogeneity(GroupOnly),
    /// Open WDVV and the unit condition.
    OpenWdvv(OpenArgs),
    /// Axioms of the vector potential (η F_μ, F°).
    VectorPotential(GroupOnly),
    /// Extended structure constants against the open potential (A, D).
    Extension(GroupOnly),
    /// ∂F°/∂s against the flat coordinates (A).
    Foan(GroupOnly),
    /// The full sweep up to a rank bound.
    All {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[command(flatten)]
        c: Common,
    },
}

/// Exact rationals only: `p/q` or an integer.
fn parse_lambda(s: &str) -> Result<GaussianRational> {
    let bad = || Error::InvalidLambda(format!("`{s}` is not an exact rational p/q"));
    if s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num = num.trim().parse::<num_bigint::BigInt>().map_err(|_| bad())?;
    let den = den.trim().parse::<num_bigint::BigInt>().map_err(|_| bad())?;
    if den == num_bigint::BigInt::from(0) {
        return Err(bad());
    }
    Ok(GaussianRational::real(BigRational::new(num, den)))
}

fn ad_family(g: CoxeterGroup) -> Result<(Family, usize)> {
    match g {
        CoxeterGroup::A(n) => Ok((Family::A, n)),
        CoxeterGroup::D(n) => Ok((Family::D, n)),
        _ => Err(Error::Unsupported(format!("{g}: only A_N and D_N are available here"))),
    }
}

fn open_extension(g: CoxeterGroup, lambda: Option<&str>, branch: Branch) -> Result<OpenExtension> {
    let lambda = lambda.map(parse_lambda).transpose()?;
    let base = match g {
        CoxeterGroup::A(n) => open_potential_a(n)?,
        CoxeterGroup::D(n) => open_potential_d(n)?,
        _ => {
            let fam = open_family(g)?;
            return fam.member(&lambda.unwrap_or_else(|| GaussianRational::from_int(1)), branch);
        }
    };
    if branch == Branch::Minus {
        return Err(Error::Unsupported(format!("{g} has no minus branch")));
    }
    match lambda {
        Some(l) => base.rescale(&l),
        None => Ok(base),
    }
}

fn report_json(r: &Report) -> Value {
    json!({
        "name": r.name,
        "passed": r.passed(),
        "checked": r.checked,
        "failures": r.failures.iter().map(|f| json!({
            "check": f.check,
            "indices": f.indices,
            "detail": f.detail,
        })).collect::<Vec<_>>(),
    })
}

fn named_polys(names: &[String], polys: &[MPoly], format: Format) -> String {
    match format {
        Format::Text => names
            .iter()
            .zip(polys)
            .map(|(n, p)| format!("{n} = {p}\n"))
            .collect(),
        Format::Json => {
            let v: Vec<Value> = names
                .iter()
                .zip(polys)
                .map(|(n, p)| json!({ "name": n, "poly": p.to_json() }))
                .collect();
            format!("{}\n", Value::Array(v))
        }
    }
}

fn poly_out(p: &MPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", p.to_json_string()),
    }
}

fn reports_out(reports: &[Report], format: Format) -> String {
    match format {
        Format::Text => reports.iter().map(|r| r.to_string()).collect(),
        Format::Json => format!("{}\n", Value::Array(reports.iter().map(report_json).collect())),
    }
}

fn bool_report(name: &str, check: &str, ok: bool) -> Report {
    let mut r = Report::new(name);
    r.expect(ok, check, vec![], || "relation does not hold".into());
    r
}

/// Every identity family the library checks, up to `max_rank`.
pub fn verify_all(max_rank: usize) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let mut closed: Vec<CoxeterGroup> = (1..=max_rank).map(CoxeterGroup::A).collect();
    closed.extend((4..=max_rank).map(CoxeterGroup::D));
    closed.extend((2..=max_rank.min(4)).map(CoxeterGroup::B));
    closed.extend((3..=max_rank + 2).map(CoxeterGroup::I2));
    closed.extend([CoxeterGroup::F4, CoxeterGroup::H3, CoxeterGroup::H4]);
    for &g in &closed {
        let fs = potential_coxeter(g)?;
        let mut r = verify_wdvv(&fs);
        r.name = format!("wdvv {g}");
        out.push(r);
        let mut r = verify_homogeneity(&fs);
        r.name = format!("homogeneity {g}");
        out.push(r);
    }
    let mut open: Vec<CoxeterGroup> = (1..=max_rank).map(CoxeterGroup::A).collect();
    open.extend((4..=max_rank).map(CoxeterGroup::D));
    for &g in &open {
        let ext = open_extension(g, None, Branch::Plus)?;
        let mut r = verify_open_wdvv(&ext);
        r.name = format!("open-wdvv {g}");
        out.push(r);
        let w = ext.weights();
        let mut r = verify_vector_potential(&ext.vector_potential(), Some(&w));
        r.name = format!("vector-potential {g}");
        out.push(r);
        let (family, n) = ad_family(g)?;
        let mut r = verify_extension_theorems(family, n)?;
        r.name = format!("extension {g}");
        out.push(r);
        if family == Family::A {
            out.push(bool_report(&format!("foan {g}"), "foan", check_foan_relation(&ext)?));
        }
    }
    for g in [CoxeterGroup::B(2), CoxeterGroup::B(3), CoxeterGroup::I2(5), CoxeterGroup::I2(6)] {
        let fam = open_family(g)?;
        for b in fam.branches() {
            for l in [1, 2, -1, 0] {
                let l = GaussianRational::from_int(l);
                if num_traits::Zero::is_zero(&l) && !fam.zero_admissible {
                    continue;
                }
                let mut r = verify_open_wdvv(&fam.member(&l, b)?);
                r.name = format!("open-wdvv {g} {b:?} λ={l}");
                out.push(r);
            }
        }
    }
    for n in 4..=max_rank.max(4) {
        let mut r = check_coefw_lemma(n)?;
        r.name = format!("coefw D{n}");
        out.push(r);
        let mut r = check_dn_second_derivative_identity(n)?;
        r.name = format!("second-derivative D{n}");
        out.push(r);
        // the closed form and the recursion are compared internally
        out.push(bool_report(&format!("omega D{n}"), "omega", omega_sequence(n, 2 * n).is_ok()));
    }
    let mut obs: Vec<CoxeterGroup> = (4..=max_rank.max(4)).map(CoxeterGroup::D).collect();
    obs.extend([6, 7, 8].map(CoxeterGroup::E));
    obs.extend([CoxeterGroup::F4, CoxeterGroup::H3, CoxeterGroup::H4]);
    for g in obs {
        out.push(obstruction_check(g)?);
    }
    for k in 3..=max_rank + 2 {
        let c = classify_i2(k)?;
        let mut r = Report::new(format!("classify I2({k})"));
        for s in &c.solutions {
            r.absorb(s.open_wdvv.clone());
            r.expect(s.matches_family, "family", vec![], || format!("{:?} branch differs", s.branch));
        }
        out.push(r);
    }
    Ok(out)
}

fn exit_for(reports: &[Report]) -> i32 {
    if reports.iter().all(Report::passed) {
        0
    } else {
        1
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let mut emit = |s: String| {
        let _ = out.write_all(s.as_bytes());
    };
    match cli.cmd {
        Cmd::Potential { g, c } => {
            let fs = potential_coxeter(g.resolve()?)?;
            emit(poly_out(fs.potential(), c.format));
            Ok(0)
        }
        Cmd::OpenPotential { g, lambda, branch, c } => {
            let ext = open_extension(g.resolve()?, lambda.as_deref(), branch.into())?;
            emit(poly_out(ext.potential(), c.format));
            Ok(0)
        }
        Cmd::FlatCoords { g, c } => {
            let (family, n) = ad_family(g.resolve()?)?;
            let fs = saito_structure(family, n)?;
            let names = fs.t_vars().names();
            emit(named_polys(&names, fs.t_of_v(), c.format));
            Ok(0)
        }
        Cmd::InvertCoords { g, c } => {
            let (family, n) = ad_family(g.resolve()?)?;
            let fs = saito_structure(family, n)?;
            let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
            emit(named_polys(&names, fs.v_of_t(), c.format));
            Ok(0)
        }
        Cmd::Correlators { g, max_n, c } => {
            let n = match g.resolve()? {
                CoxeterGroup::A(n) => n,
                other => return Err(Error::Unsupported(format!("correlators for {other}"))),
            };
            let t = correlator_recursion_a(n, max_n);
            match c.format {
                Format::Text => {
                    emit(format!("sigma^{} = {}\n", n + 2, t.sigma_only));
                    for (al, v) in &t.values {
                        let tau: Vec<String> = al.iter().map(|a| a.to_string()).collect();
                        emit(format!("tau({}) sigma^{} = {v}\n", tau.join(","), t.k_of(al)));
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = t
                        .values
                        .iter()
                        .map(|(al, v)| json!({ "alphas": al, "k": t.k_of(al), "value": v.to_string() }))
                        .collect();
                    emit(format!(
                        "{}\n",
                        json!({ "n": n, "sigma_only": t.sigma_only.to_string(), "values": rows })
                    ));
                }
            }
            Ok(0)
        }
        Cmd::Classify { g, branch, c } => {
            let k = match g.resolve()? {
                CoxeterGroup::I2(k) => k,
                CoxeterGroup::B(2) => 4,
                CoxeterGroup::A(2) => 3,
                other => return Err(Error::Unsupported(format!("classification for {other}"))),
            };
            let cl = classify_i2(k)?;
            let wanted: Vec<_> = cl
                .solutions
                .iter()
                .filter(|s| branch.map_or(true, |b| s.branch == b.into()))
                .collect();
            if wanted.is_empty() {
                return Err(Error::Unsupported(format!("I2({k}) has no such branch")));
            }
            match c.format {
                Format::Text => {
                    emit(format!("alpha_{k} = {}\n", cl.alpha_k));
                    for s in &wanted {
                        let betas: Vec<String> = s.betas.iter().map(|b| b.to_string()).collect();
                        emit(format!("{:?}: beta = [{}]\n", s.branch, betas.join(", ")));
                        emit(format!("{:?}: F° = {}\n", s.branch, s.extension.potential()));
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = wanted
                        .iter()
                        .map(|s| {
                            json!({
                                "branch": format!("{:?}", s.branch).to_lowercase(),
                                "betas": s.betas.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                                "potential": s.extension.potential().to_json(),
                                "open_wdvv": report_json(&s.open_wdvv),
                                "matches_family": s.matches_family,
                            })
                        })
                        .collect();
                    emit(format!("{}\n", json!({ "k": k, "alpha_k": cl.alpha_k.to_string(), "solutions": rows })));
                }
            }
            let ok = wanted.iter().all(|s| s.open_wdvv.passed() && s.matches_family);
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Obstruction { g, c } => {
            let r = obstruction_check(g.resolve()?)?;
            emit(reports_out(std::slice::from_ref(&r), c.format));
            Ok(exit_for(&[r]))
        }
        Cmd::Verify { what } => {
            let (reports, format) = match what {
                VerifyCmd::Wdvv(a) => {
                    let g = a.g.resolve()?;
                    let mut r = verify_wdvv(&potential_coxeter(g)?);
                    r.name = format!("wdvv {g}");
                    (vec![r], a.c.format)
                }
                VerifyCmd::Homogeneity(a) => {
                    let g = a.g.resolve()?;
                    let mut r = verify_homogeneity(&potential_coxeter(g)?);
                    r.name = format!("homogeneity {g}");
                    let mut v = vec![r];
                    if let Ok(ext) = open_extension(g, None, Branch::Plus) {
                        let mut r = ext.verify_homogeneity();
                        r.name = format!("open-homogeneity {g}");
                        v.push(r);
                    }
                    (v, a.c.format)
                }
                VerifyCmd::OpenWdvv(a) => {
                    let g = a.g.resolve()?;
                    let ext = open_extension(g, a.lambda.as_deref(), a.branch.into())?;
                    let mut r = verify_open_wdvv(&ext);
                    r.name = format!("open-wdvv {g}");
                    (vec![r], a.c.format)
                }
                VerifyCmd::VectorPotential(a) => {
                    let g = a.g.resolve()?;
                    let ext = open_extension(g, None, Branch::Plus)?;
                    let w = ext.weights();
                    let mut r = verify_vector_potential(&ext.vector_potential(), Some(&w));
                    r.name = format!("vector-potential {g}");
                    (vec![r], a.c.format)
                }
                VerifyCmd::Extension(a) => {
                    let (family, n) = ad_family(a.g.resolve()?)?;
                    (vec![verify_extension_theorems(family, n)?], a.c.format)
                }
                VerifyCmd::Foan(a) => {
                    let g = a.g.resolve()?;
                    let n = match g {
                        CoxeterGroup::A(n) => n,
                        other => return Err(Error::Unsupported(format!("foan for {other}"))),
                    };
                    let ok = check_foan_relation(&open_potential_a(n)?)?;
                    (vec![bool_report(&format!("foan {g}"), "foan", ok)], a.c.format)
                }
                VerifyCmd::All { max_rank, c } => (verify_all(max_rank)?, c.format),
            };
            emit(reports_out(&reports, format));
            Ok(exit_for(&reports))
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["frobenius"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn potential_text_and_json_agree() {
        let (c, text, _) = call(&["potential", "A", "3"]);
        assert_eq!(c, 0);
        let (c, js, _) = call(&["potential", "A3", "--format", "json"]);
        assert_eq!(c, 0);
        let p = MPoly::from_json_str(js.trim()).unwrap();
        let q = MPoly::parse(text.trim(), p.vars()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["potential"]).0, 2);
        assert_eq!(call(&["potential", "A", "3", "--bogus"]).0, 2);
        assert_eq!(call(&["potential", "Q", "3"]).0, 2);
        assert_eq!(call(&["open-potential", "A", "2", "--lambda", "0.5"]).0, 2);
        assert_eq!(call(&["open-potential", "A", "2", "--lambda", "1/0"]).0, 2);
    }

    #[test]
    fn lambda_is_exact() {
        let (c, out, _) = call(&["open-potential", "A", "1", "--lambda", "2"]);
        assert_eq!(c, 0);
        assert_eq!(out.trim(), "2/3*s^3 + t1*s");
        assert_eq!(parse_lambda("-6/4").unwrap(), crate::exactalg::q(-3, 2));
    }

    #[test]
    fn verify_verbs_exit_zero() {
        assert_eq!(call(&["verify", "open-wdvv", "D", "4"]).0, 0);
        assert_eq!(call(&["verify", "wdvv", "I2", "5"]).0, 0);
        assert_eq!(call(&["verify", "foan", "A", "3"]).0, 0);
        assert_eq!(call(&["obstruction", "E", "6"]).0, 0);
    }

    #[test]
    fn classify_minus_branch() {
        let (c, out, _) = call(&["classify", "I2", "4", "--branch", "minus"]);
        assert_eq!(c, 0);
        assert!(out.contains("Minus: F° = "));
        assert!(!out.contains("Plus"));
    }

    #[test]
    fn correlator_table() {
        let (c, out, _) = call(&["correlators", "A", "2", "--max-n", "2"]);
        assert_eq!(c, 0);
        assert!(out.contains("tau(2,2) sigma^0 = 1"));
    }
}
