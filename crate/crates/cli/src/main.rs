//! Command-line front end: resultants, reduced resultants, Bézout
//! certificates and the supporting operations on ascending-coefficient text
//! input.

mod selfcheck;

use std::process::ExitCode;

use artres::bench;
use artres::bivariate::res_y;
use artres::linalg::{howell, sylvester, Matrix};
use artres::numberfield::{ideal_min, ideal_norm, FieldElem, Ideal2, NumberField};
use artres::padic::{padic_gcd, PadicCtx};
use artres::poly::{divrem_primitive, fun_factor, invert_mod, invert_unit};
use artres::resultant::{res, res_ideal, rres, rres_bezout};
use artres::ring::Zn;
use artres::text::{
    format_matrix, format_poly, parse_bipoly, parse_int, parse_int_list, parse_modulus, parse_poly, parse_uint,
    ParseElem, RingSpec, INT_GRAMMAR,
};
use artres::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "artres", version, about = "Resultants over Z/nZ and Galois rings")]
struct Cli {
    /// Print a JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Ring {
    /// Modulus `n`, or a Galois ring `p^e;k` / `p^e;k;l0,...,lk`.
    #[arg(long = "mod", value_name = "MODULUS")]
    modulus: String,
}

#[derive(Args)]
struct Pair {
    #[command(flatten)]
    ring: Ring,
    /// First polynomial, ascending coefficients such as 3,2,1.
    #[arg(allow_hyphen_values = true)]
    f: String,
    /// Second polynomial.
    #[arg(allow_hyphen_values = true)]
    g: String,
}

#[derive(Args)]
struct Single {
    #[command(flatten)]
    ring: Ring,
    #[arg(allow_hyphen_values = true)]
    f: String,
}

#[derive(Args)]
struct Ideal {
    /// Defining polynomial of the field, monic, ascending integer coefficients.
    #[arg(long, allow_hyphen_values = true)]
    minpoly: String,
    /// Integer generator `a` of the ideal `(a, α)`.
    #[arg(long)]
    a: String,
    /// Numerator of `α` in the power basis.
    #[arg(long, allow_hyphen_values = true)]
    num: String,
    /// Denominator of `α`.
    #[arg(long, default_value = "1")]
    den: String,
}

#[derive(Subcommand)]
enum Command {
    /// Resultant res(f, g).
    Res(Pair),
    /// Canonical generator of the reduced resultant (f, g) ∩ R.
    Rres(Pair),
    /// Reduced resultant r with cofactors u, v such that u f + v g = r.
    Bezout(Pair),
    /// Canonical generator of the ideal (res(f, g)).
    ResIdeal(Pair),
    /// Quotient and remainder of f by g.
    Divrem(Pair),
    /// Factor f as a unit times a monic polynomial.
    Funfactor(Single),
    /// Inverse of a unit polynomial.
    Inv(Single),
    /// Inverse of u modulo a monic polynomial f.
    Invmod(Pair),
    /// Howell form of a matrix given as rows `a,b;c,d`.
    Howell {
        #[command(flatten)]
        ring: Ring,
        #[arg(allow_hyphen_values = true)]
        rows: String,
    },
    /// Sylvester matrix of f and g.
    Sylvester(Pair),
    /// Resultant in y of bivariate polynomials `p0;p1;...` (ascending in y).
    Bivres(Pair),
    /// Greatest common divisor over Z/p^k.
    PadicGcd {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        prec: u32,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Norm of the ideal (a, α) of Z[γ].
    NfNorm(Ideal),
    /// Minimum (a, α) ∩ Z of the ideal (a, α) of Z[γ].
    NfMin(Ideal),
    /// Run the oracle-equivalence suite at fixed seeds.
    Selfcheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Time res and rres and emit CSV (algorithm,d,n-class,seconds).
    Bench {
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Degrees to time, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = bench::DEGREES)]
        degrees: Vec<usize>,
        /// Repetitions per case; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

/// What a command prints: plain lines and the equivalent JSON object.
struct Report {
    lines: Vec<String>,
    json: Value,
    status: ExitCode,
}

impl Report {
    fn new(lines: Vec<String>, json: Value) -> Self {
        Report { lines, json, status: ExitCode::SUCCESS }
    }

    fn value(v: String) -> Self {
        Report::new(vec![v.clone()], json!({ "value": v }))
    }
}

macro_rules! over_ring {
    ($spec:expr, $cmd:ident ( $($arg:expr),* )) => {
        match $spec {
            RingSpec::Zn(r) => $cmd(&r, $($arg),*),
            RingSpec::Galois(r) => $cmd(&r, $($arg),*),
        }
    };
}

fn cmd_res<R: ParseElem>(r: &R, f: &str, g: &str) -> artres::Result<Report> {
    let (f, g) = (parse_poly(r, f)?, parse_poly(r, g)?);
    Ok(Report::value(r.format_elem(&res(&f, &g)?)))
}

fn cmd_rres<R: ParseElem>(r: &R, f: &str, g: &str) -> artres::Result<Report> {
    let (f, g) = (parse_poly(r, f)?, parse_poly(r, g)?);
    Ok(Report::value(r.format_elem(&rres(&f, &g)?)))
}

fn cmd_res_ideal<R: ParseElem>(r: &R, f: &str, g: &str) -> artres::Result<Report> {
    let (f, g) = (parse_poly(r, f)?, parse_poly(r, g)?);
    Ok(Report::value(r.format_elem(&res_ideal(&f, &g)?)))
}

fn cmd_bezout<R: ParseElem>(r: &R, f: &str, g: &str) -> artres::Result<Report> {
    let (f, g) = (parse_poly(r, f)?, parse_poly(r, g)?);
    let cert = rres_bezout(&f, &g)?;
    if !cert.verify(&f, &g) {
        return Err(Error::Internal("Bezout certificate does not recombine".into()));
    }
    let (value, u, v) = (r.format_elem(&cert.r), format_poly(&cert.u), format_poly(&cert.v));
    Ok(Report::new(
        vec![format!("r={value}"), format!("u={u}"), format!("v={v}")],
        json!({ "value": value, "u": u, "v": v }),
    ))
}

fn cmd_divrem<R: ParseElem>(r: &R, f: &str, g: &str) -> artres::Result<Report> {
    let (f, g) = (parse_poly(r, f)?, parse_poly(r, g)?);
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (q, rem) = if r.is_unit(&g.lc()) { f.divrem(&g)? } else { divrem_primitive(&f, &g)? };
    let (q, rem) = (format_poly(&q), format_poly(&rem));
    Ok(Report::new(vec![format!("q={q}"), format!("r={rem}")], json!({ "value": q, "q": q, "r": rem })))
}

fn cmd_funfactor<R: ParseElem>(r: &R, f: &str) -> artres::Result<Report> {
    let ff = fun_factor(&parse_poly(r, f)?)?;
    let (u, g) = (format_poly(&ff.u), format_poly(&ff.gtilde));
    Ok(Report::new(vec![format!("u={u}"), format!("g={g}")], json!({ "value": g, "u": u, "g": g, "k": ff.k })))
}

fn cmd_inv<R: ParseElem>(r: &R, f: &str) -> artres::Result<Report> {
    Ok(Report::value(format_poly(&invert_unit(&parse_poly(r, f)?)?)))
}

fn cmd_invmod<R: ParseElem>(r: &R, u: &str, f: &str) -> artres::Result<Report> {
    let (u, f) = (parse_poly(r, u)?, parse_poly(r, f)?);
    Ok(Report::value(format_poly(&invert_mod(&u, &f)?)))
}

fn zn_only(spec: RingSpec) -> artres::Result<Zn> {
    match spec {
        RingSpec::Zn(r) => Ok(r),
        RingSpec::Galois(_) => Err(Error::Parse {
            position: 0,
            message: "this command needs Z/n".into(),
            expected: "a decimal modulus n >= 2",
        }),
    }
}

fn matrix_report(m: &Matrix) -> Report {
    let rows: Vec<Vec<String>> = m.row_vecs().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    Report::new(format_matrix(m).lines().map(String::from).collect(), json!({ "value": rows }))
}

const MATRIX_GRAMMAR: &str = "rows separated by ';', entries by ',', e.g. 2,1;2,3";

fn cmd_howell(r: &Zn, rows: &str) -> artres::Result<Report> {
    let mut parsed = Vec::new();
    let mut offset = 0;
    for row in rows.split(';') {
        let mut entries = Vec::new();
        let mut pos = offset;
        for tok in row.split(',') {
            entries.push(parse_int(tok, pos, MATRIX_GRAMMAR)?);
            pos += tok.len() + 1;
        }
        parsed.push(entries);
        offset += row.len() + 1;
    }
    if parsed.iter().any(|row| row.len() != parsed[0].len()) {
        return Err(Error::Parse { position: 0, message: "rows differ in length".into(), expected: MATRIX_GRAMMAR });
    }
    Ok(matrix_report(&howell(&Matrix::from_rows(r, &parsed)?)))
}

fn cmd_sylvester(r: &Zn, f: &str, g: &str) -> artres::Result<Report> {
    Ok(matrix_report(&sylvester(&parse_poly(r, f)?, &parse_poly(r, g)?)?))
}

fn cmd_bivres(r: &Zn, f: &str, g: &str) -> artres::Result<Report> {
    Ok(Report::value(format_poly(&res_y(&parse_bipoly(r, f)?, &parse_bipoly(r, g)?)?)))
}

fn cmd_padic_gcd(p: u64, prec: u32, f: &str, g: &str) -> artres::Result<Report> {
    let ctx = PadicCtx::new(p, prec)?;
    let (f, g) = (parse_poly(ctx.ring(), f)?, parse_poly(ctx.ring(), g)?);
    let out = padic_gcd(&ctx, &f, &g)?;
    let gcd = format_poly(&out.gcd);
    Ok(Report::new(
        vec![gcd.clone(), format!("delta={}", out.delta)],
        json!({ "value": gcd, "delta": out.delta, "precision": prec - out.delta }),
    ))
}

fn parse_ideal(args: &Ideal) -> artres::Result<(NumberField, Ideal2)> {
    let field = NumberField::new(parse_int_list(&args.minpoly)?)?;
    let alpha = FieldElem::new(&field, parse_int_list(&args.num)?, parse_uint(&args.den, 0, INT_GRAMMAR)?)?;
    let ideal = Ideal2::new(parse_uint(&args.a, 0, INT_GRAMMAR)?, alpha)?;
    Ok((field, ideal))
}

fn cmd_selfcheck(seed: u64) -> Report {
    let results = selfcheck::run(seed);
    let total: usize = results.iter().map(|r| r.total).sum();
    let failed: usize = results.iter().map(|r| r.failing.len()).sum();
    let mut lines: Vec<String> = results.iter().map(|r| format!("{}: {}/{}", r.name, r.passed, r.total)).collect();
    let failing: Vec<Value> = results
        .iter()
        .flat_map(|r| r.failing.iter().map(move |s| json!({ "suite": r.name, "seed": s })))
        .collect();
    for r in &results {
        lines.extend(r.failing.iter().map(|s| format!("failing seed {s} in {}", r.name)));
    }
    let verdict = if failed == 0 { format!("PASS ({total} cases)") } else { format!("FAIL ({failed} of {total} cases)") };
    lines.push(verdict.clone());
    let mut report = Report::new(lines, json!({ "value": verdict, "cases": total, "failed": failed, "failing": failing }));
    if failed > 0 {
        report.status = ExitCode::from(1);
    }
    report
}

fn cmd_bench(out: Option<&std::path::Path>, seed: u64, degrees: &[usize], reps: usize) -> artres::Result<Report> {
    let timings = bench::run(degrees, seed, reps)?;
    let csv = bench::to_csv(&timings);
    let mut lines = Vec::new();
    match out {
        Some(path) => {
            std::fs::write(path, &csv).map_err(|e| Error::Internal(format!("writing {}: {e}", path.display())))?;
            for (alg, d, ratio) in bench::doubling_ratios(&timings, bench::NClass::Prime) {
                lines.push(format!("{} t({})/t({d}) = {ratio:.2}", alg.name(), 2 * d));
            }
            for (alg, d, ratio) in bench::composite_ratios(&timings) {
                lines.push(format!("{} composite/prime at d={d} = {ratio:.2}", alg.name()));
            }
        }
        None => lines.extend(csv.lines().map(String::from)),
    }
    let rows: Vec<Value> = timings
        .iter()
        .map(|t| json!({ "algorithm": t.algorithm.name(), "d": t.degree, "n-class": t.class.name(), "seconds": t.seconds }))
        .collect();
    Ok(Report::new(lines, json!({ "value": rows })))
}

fn dispatch(command: &Command) -> artres::Result<Report> {
    let ring = |r: &Ring| parse_modulus(&r.modulus);
    match command {
        Command::Res(a) => over_ring!(ring(&a.ring)?, cmd_res(&a.f, &a.g)),
        Command::Rres(a) => over_ring!(ring(&a.ring)?, cmd_rres(&a.f, &a.g)),
        Command::Bezout(a) => over_ring!(ring(&a.ring)?, cmd_bezout(&a.f, &a.g)),
        Command::ResIdeal(a) => over_ring!(ring(&a.ring)?, cmd_res_ideal(&a.f, &a.g)),
        Command::Divrem(a) => over_ring!(ring(&a.ring)?, cmd_divrem(&a.f, &a.g)),
        Command::Funfactor(a) => over_ring!(ring(&a.ring)?, cmd_funfactor(&a.f)),
        Command::Inv(a) => over_ring!(ring(&a.ring)?, cmd_inv(&a.f)),
        Command::Invmod(a) => over_ring!(ring(&a.ring)?, cmd_invmod(&a.f, &a.g)),
        Command::Howell { ring: r, rows } => cmd_howell(&zn_only(ring(r)?)?, rows),
        Command::Sylvester(a) => cmd_sylvester(&zn_only(ring(&a.ring)?)?, &a.f, &a.g),
        Command::Bivres(a) => cmd_bivres(&zn_only(ring(&a.ring)?)?, &a.f, &a.g),
        Command::PadicGcd { p, prec, f, g } => cmd_padic_gcd(*p, *prec, f, g),
        Command::NfNorm(args) => {
            let (field, ideal) = parse_ideal(args)?;
            Ok(Report::value(ideal_norm(&field, &ideal)?.to_string()))
        }
        Command::NfMin(args) => {
            let (field, ideal) = parse_ideal(args)?;
            Ok(Report::value(ideal_min(&field, &ideal)?.to_string()))
        }
        Command::Selfcheck { seed } => Ok(cmd_selfcheck(*seed)),
        Command::Bench { out, seed, degrees, reps } => cmd_bench(out.as_deref(), *seed, degrees, *reps),
    }
}

/// Usage errors exit with 2, everything else with 3.
fn exit_code(e: &Error) -> ExitCode {
    match e {
        Error::Parse { .. } | Error::InvalidRing(_) => ExitCode::from(2),
        _ => ExitCode::from(3),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                for line in &report.lines {
                    println!("{line}");
                }
            }
            report.status
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let parse = Error::Parse { position: 3, message: "x".into(), expected: INT_GRAMMAR };
        assert_eq!(exit_code(&parse), ExitCode::from(2));
        assert_eq!(exit_code(&Error::InvalidRing("1".into())), ExitCode::from(2));
        assert_eq!(exit_code(&Error::Internal("x".into())), ExitCode::from(3));
    }

    #[test]
    fn modulus_one_is_rejected() {
        assert!(matches!(parse_modulus("1"), Err(Error::Parse { .. })));
    }
}
