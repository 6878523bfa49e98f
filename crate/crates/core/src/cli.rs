//! Command-line front end. `run` is pure: it returns the exit code and both
//! output streams so that tests can call it directly.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cosets::Facet;
use crate::oracle::{self, bfs_ball, Ball};
use crate::resolution::{unitary_example, unitary_w_p2_word};
use crate::root_data::{CartanType, Coweight};
use crate::schubert::StrataPoset;
use crate::syntax::{format_element, format_translation_form, parse_element, parse_facet};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Side};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "affine-schubert",
    version,
    about = "Affine Weyl group and Schubert variety combinatorics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: Config,
}

#[derive(Debug, Args)]
pub struct Config {
    /// Cartan type letter: A, B, C or D.
    #[arg(long = "type", global = true)]
    pub cartan_type: Option<CartanType>,
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Element, e.g. `w:0,1,0` or `t:-1,0|id`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub element: Option<String>,
    /// Second operand of `mult` and `bruhat`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub other: Option<String>,
    /// Left facet F' as `1,2` or `none`.
    #[arg(long, global = true, default_value = "none")]
    pub left: String,
    /// Right facet F as `1,2` or `none`.
    #[arg(long, global = true, default_value = "none")]
    pub right: String,
    /// Length bound for `enumerate`.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Cross-check the result against the brute-force oracles.
    #[arg(long, global = true)]
    pub verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length of the element.
    Length,
    /// Reduced word (smallest left descent first).
    Word,
    /// Product element * other.
    Mult,
    /// Whether element <= other in the Bruhat order.
    Bruhat,
    /// Minimal element of W_{F'} w W_F.
    MinRep,
    /// Max-min representative of W_{F'} w W_F.
    MaxminRep,
    /// Root-counting length of the double coset.
    WaldLength,
    /// Dimension of the Schubert variety of W_{F'} w W_F.
    Dim,
    /// Stratification poset of the Schubert variety.
    Strata,
    /// Resolutive sequence for w^F, with F the right facet.
    Resolve,
    /// The C_m example attached to mu_p = (1^p, 0^{m-p}).
    Unitary { m: usize, p: usize },
    /// All max-min representatives of length at most --bound.
    Enumerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Invariant(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Result of a subcommand in every output format it supports.
struct Report {
    text: String,
    json: Value,
    dot: Option<String>,
    notes: Vec<String>,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            dot: None,
            notes: Vec::new(),
        }
    }
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), e.render().to_string())
            } else {
                (e.render().to_string(), String::new())
            };
            return CliOutput {
                code,
                stdout,
                stderr,
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let mut stderr = String::new();
            for note in &report.notes {
                writeln!(stderr, "note: {note}").unwrap();
            }
            let stdout = match cli.config.output {
                Output::Text => format!("{}\n", report.text),
                Output::Json => format!("{}\n", serde_json::to_string(&report.json).unwrap()),
                Output::Dot => match report.dot {
                    Some(dot) => dot,
                    None => {
                        return CliOutput {
                            code: EXIT_USAGE,
                            stdout: String::new(),
                            stderr: "error: dot output is only available for strata\n".into(),
                        }
                    }
                },
            };
            CliOutput {
                code: EXIT_OK,
                stdout,
                stderr,
            }
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Invariant(m) => (EXIT_INVARIANT, m),
                Failure::Verify(m) => (EXIT_VERIFY_FAILED, format!("verification failed: {m}")),
            };
            CliOutput {
                code,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            }
        }
    }
}

struct Ctx<'a> {
    group: AffineWeylGroup,
    cfg: &'a Config,
}

impl Ctx<'_> {
    fn element(&self) -> Outcome<AffineWeylElement> {
        let text = self
            .cfg
            .element
            .as_deref()
            .ok_or_else(|| Failure::Usage("--element is required".into()))?;
        Ok(parse_element(&self.group, text)?)
    }

    fn other(&self) -> Outcome<AffineWeylElement> {
        let text = self
            .cfg
            .other
            .as_deref()
            .ok_or_else(|| Failure::Usage("--other is required".into()))?;
        Ok(parse_element(&self.group, text)?)
    }

    fn facets(&self) -> Outcome<(Facet, Facet)> {
        let rank = self.group.rank();
        Ok((
            parse_facet(&self.cfg.left, rank)?,
            parse_facet(&self.cfg.right, rank)?,
        ))
    }

    fn word(&self, x: &AffineWeylElement) -> Vec<usize> {
        self.group.reduced_word(x).0
    }

    fn ball(&self, radius: usize) -> Outcome<Ball> {
        Ok(bfs_ball(&self.group, radius)?)
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Outcome<()> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verify(what()))
    }
}

fn execute(cli: &Cli) -> Outcome<Report> {
    if let Command::Unitary { m, p } = cli.command {
        return unitary(m, p, cli.config.verify);
    }
    let cfg = &cli.config;
    let (t, rank) = match (cfg.cartan_type, cfg.rank) {
        (Some(t), Some(r)) => (t, r),
        _ => return Err(Failure::Usage("--type and --rank are required".into())),
    };
    let ctx = Ctx {
        group: AffineWeylGroup::build(t, rank)?,
        cfg,
    };
    let g = &ctx.group;
    match cli.command {
        Command::Length => {
            let x = ctx.element()?;
            let l = g.length(&x);
            if cfg.verify {
                let ball = ctx.ball(l)?;
                let ol = ball.oracle_length(&x)?;
                check(ol == l, || format!("oracle length {ol}, formula {l}"))?;
            }
            Ok(Report::new(l.to_string(), json!({ "length": l })))
        }
        Command::Word => {
            let x = ctx.element()?;
            let w = g.reduced_word(&x);
            if cfg.verify {
                let ball = ctx.ball(w.len())?;
                check(g.from_word(w.letters())? == x, || {
                    "word does not evaluate to the element".into()
                })?;
                check(ball.oracle_length(&x)? == w.len(), || {
                    "word is not reduced".into()
                })?;
            }
            Ok(Report::new(
                format_element(g, &x),
                json!({ "length": w.len(), "word": w.0 }),
            ))
        }
        Command::Mult => {
            let (x, y) = (ctx.element()?, ctx.other()?);
            let z = g.multiply(&x, &y);
            if cfg.verify {
                let concat: Vec<usize> = ctx.word(&x).into_iter().chain(ctx.word(&y)).collect();
                check(g.from_word(&concat)? == z, || {
                    "product disagrees with word concatenation".into()
                })?;
                let ball = ctx.ball(concat.len())?;
                let l = ball.oracle_length(&z)?;
                check(l == g.length(&z), || "length of the product".into())?;
            }
            Ok(Report::new(
                format!(
                    "{}\n{}",
                    format_element(g, &z),
                    format_translation_form(g, &z)
                ),
                json!({
                    "length": g.length(&z),
                    "translation": z.translation().0,
                    "word": ctx.word(&z),
                }),
            ))
        }
        Command::Bruhat => {
            let (u, w) = (ctx.element()?, ctx.other()?);
            let le = g.bruhat_leq(&u, &w);
            if cfg.verify {
                let ball = ctx.ball(g.length(&w))?;
                let ol = ball.oracle_bruhat(g, &u, &w)?;
                check(ol == le, || format!("oracle says {ol}"))?;
            }
            Ok(Report::new(le.to_string(), json!({ "leq": le })))
        }
        Command::MinRep => {
            let w = ctx.element()?;
            let (left, right) = ctx.facets()?;
            let x = g.min_left_rep(&g.min_right_rep(&w, &right), &left);
            if cfg.verify {
                let (ox, ol) = oracle::oracle_min_rep(g, &w, &left, &right);
                check(ox == x && ol == g.length(&x), || {
                    format!("oracle minimum {}", format_element(g, &ox))
                })?;
            }
            Ok(Report::new(
                format_element(g, &x),
                json!({ "length": g.length(&x), "word": ctx.word(&x) }),
            ))
        }
        Command::MaxminRep | Command::WaldLength | Command::Dim => {
            let w = ctx.element()?;
            let (left, right) = ctx.facets()?;
            let x = g.maxmin_rep(&w, &left, &right);
            let l = g.length(&x);
            let wald = g.waldspurger_length(&w, &left, &right)?;
            if wald != l {
                return Err(Failure::Invariant(format!(
                    "root count {wald} differs from l(maxmin) = {l}"
                )));
            }
            if cfg.verify {
                let (ox, ol) = oracle::oracle_maxmin(g, &w, &left, &right);
                check(ol == l, || format!("oracle value {ol}, computed {l}"))?;
                check(
                    ox == x || !matches!(cli.command, Command::MaxminRep),
                    || format!("oracle representative {}", format_element(g, &ox)),
                )?;
            }
            Ok(match cli.command {
                Command::MaxminRep => Report::new(
                    format_element(g, &x),
                    json!({ "length": l, "translation": x.translation().0, "word": ctx.word(&x) }),
                ),
                Command::WaldLength => Report::new(l.to_string(), json!({ "length": wald })),
                _ => Report::new(l.to_string(), json!({ "dim": l })),
            })
        }
        Command::Strata => {
            let w = ctx.element()?;
            let (left, right) = ctx.facets()?;
            let poset = g.strata(&w, &left, &right);
            if cfg.verify {
                verify_strata(g, &poset, &left, &right)?;
            }
            let mut text = String::new();
            for (k, x) in poset.elements.iter().enumerate() {
                let above: Vec<String> = poset
                    .covers
                    .iter()
                    .filter(|&&(a, _)| a == k)
                    .map(|&(_, b)| b.to_string())
                    .collect();
                writeln!(
                    text,
                    "{k}: {} dim {} covered by [{}]",
                    format_element(g, x),
                    poset.dims[k],
                    above.join(",")
                )
                .unwrap();
            }
            let mut report = Report::new(text.trim_end(), poset.to_json());
            report.dot = Some(poset.to_dot());
            Ok(report)
        }
        Command::Resolve => {
            let input = ctx.element()?;
            let (_, f) = ctx.facets()?;
            let w = g.min_right_rep(&input, &f);
            let normalized = w != input;
            let steps = g.resolutive_sequence(&w, &f)?;
            let product = steps
                .iter()
                .fold(g.identity(), |acc, s| g.multiply(&acc, &s.factor));
            let total: usize = steps.iter().map(|s| g.length(&s.factor)).sum();
            let bs = g.bott_samelson_dim(&steps)?;
            if product != w || total != g.length(&w) || bs != total {
                return Err(Failure::Invariant(
                    "factorization is not length additive".into(),
                ));
            }
            if cfg.verify {
                let ball = ctx.ball(g.length(&w))?;
                check(ball.oracle_length(&w)? == total, || {
                    "oracle length of w".into()
                })?;
                for (k, s) in steps.iter().enumerate() {
                    let (ox, _) = oracle::oracle_longest_rep(g, &s.parahoric, &s.intersection);
                    check(ox == s.factor, || {
                        format!("factor {} is not the longest representative", k + 1)
                    })?;
                }
            }
            let mut json = g.resolution_json(&steps)?;
            json["input"] = json!(ctx.word(&input));
            json["normalized"] = json!(normalized);
            json["word"] = json!(ctx.word(&w));
            let mut text = String::new();
            if normalized {
                writeln!(
                    text,
                    "normalized {} to {}",
                    format_element(g, &input),
                    format_element(g, &w)
                )
                .unwrap();
            }
            for (k, s) in steps.iter().enumerate() {
                writeln!(
                    text,
                    "{}: P = {{{}}} Q = {{{}}} factor {}",
                    k + 1,
                    s.parahoric,
                    s.intersection,
                    format_element(g, &s.factor)
                )
                .unwrap();
            }
            write!(text, "bott-samelson dim {bs}").unwrap();
            let mut report = Report::new(text, json);
            if normalized {
                report.notes.push(format!(
                    "replaced the input by its minimal representative modulo W_F, F = {f}"
                ));
            }
            Ok(report)
        }
        Command::Enumerate => {
            let bound = cfg
                .bound
                .ok_or_else(|| Failure::Usage("--bound is required".into()))?;
            let (left, right) = ctx.facets()?;
            let reps = g.enumerate_reps(&left, &right, bound);
            if cfg.verify {
                let ball = ctx.ball(bound)?;
                let expected: BTreeSet<_> = ball
                    .elements()
                    .filter(|x| oracle::oracle_maxmin(g, x, &left, &right).0 == **x)
                    .cloned()
                    .collect();
                let got: BTreeSet<_> = reps.iter().cloned().collect();
                check(expected == got, || {
                    format!(
                        "oracle finds {} representatives, enumeration {}",
                        expected.len(),
                        got.len()
                    )
                })?;
            }
            let words: Vec<Vec<usize>> = reps.iter().map(|x| ctx.word(x)).collect();
            let text: Vec<String> = reps.iter().map(|x| format_element(g, x)).collect();
            Ok(Report::new(
                text.join("\n"),
                json!({ "count": reps.len(), "elements": words }),
            ))
        }
        Command::Unitary { .. } => unreachable!("handled above"),
    }
}

fn verify_strata(
    g: &AffineWeylGroup,
    poset: &StrataPoset,
    left: &Facet,
    right: &Facet,
) -> Outcome<()> {
    let top = poset.top();
    let ball = bfs_ball(g, g.length(top))?;
    let mut expected = BTreeSet::new();
    for x in ball.elements() {
        if ball.oracle_bruhat(g, x, top)? && oracle::oracle_maxmin(g, x, left, right).0 == *x {
            expected.insert(x.clone());
        }
    }
    let got: BTreeSet<_> = poset.elements.iter().cloned().collect();
    check(expected == got, || {
        format!(
            "oracle finds {} strata, computed {}",
            expected.len(),
            got.len()
        )
    })?;
    let n = poset.len();
    let mut below = vec![vec![false; n]; n];
    for (i, row) in below.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = i != j && ball.oracle_bruhat(g, &poset.elements[i], &poset.elements[j])?;
        }
    }
    let covers: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| below[i][j] && !(0..n).any(|k| below[i][k] && below[k][j]))
        .collect();
    check(covers == poset.covers, || {
        "cover relations differ from the oracle".into()
    })
}

fn unitary(m: usize, p: usize, verify: bool) -> Outcome<Report> {
    let (g, ex) = unitary_example(m, p)?;
    if verify {
        let expected = g.from_word(unitary_w_p2_word(p).letters())?;
        check(ex.w_p2 == expected, || {
            "w_p2 differs from the product of the blocks s_0...s_{i-1}".into()
        })?;
        let ball = bfs_ball(&g, p * (p + 1) / 2)?;
        check(ball.oracle_length(&ex.w_p2)? == p * (p + 1) / 2, || {
            "oracle length of w_p2".into()
        })?;
        let special = Facet::special_vertex(m);
        let w = g.from_translation(&-&ex.mu_p)?;
        let (_, dim) = oracle::oracle_maxmin(&g, &w, &special, &special);
        check(dim == ex.dim, || format!("oracle dimension {dim}"))?;
        for i in 0..=p {
            let mu_i = Coweight((0..m).map(|j| -i64::from(j < i)).collect());
            let e = g.from_translation(&mu_i)?;
            let (_, d) = oracle::oracle_maxmin(&g, &e, &special, &special);
            let expected = i * (2 * m + 1 - i);
            check(d == expected, || format!("stratum {i} has dimension {d}"))?;
        }
        check(g.is_min_rep(&ex.w_p2, &special, Side::Right), || {
            "w_p2 is not right-minimal".into()
        })?;
    }
    let text = format!(
        "C{m}, p = {p}: dim {}, l(w_p2) = {}, strata {}, Q_p = {{{}}}",
        ex.dim,
        g.length(&ex.w_p2),
        ex.strata_count,
        ex.q_p
    );
    Ok(Report::new(text, ex.to_json(&g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> CliOutput {
        run(std::iter::once("affine-schubert").chain(args.split_whitespace()))
    }

    #[test]
    fn dim_example() {
        let out = call("dim --type C --rank 2 --element t:-1,0|id --left 1,2 --right 1,2");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "4\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            call("dim --type C --rank 2 --element t:-1|id").code,
            EXIT_USAGE
        );
        assert_eq!(call("dim --type X --rank 2 --element id").code, EXIT_USAGE);
        assert_eq!(call("length --type C --rank 2").code, EXIT_USAGE);
        assert_eq!(
            call("length --type C --rank 2 --element id --output dot").code,
            EXIT_USAGE
        );
        assert_eq!(call("frobnicate").code, EXIT_USAGE);
        assert_eq!(call("unitary 2 3").code, EXIT_USAGE);
        assert_eq!(call("--help").code, EXIT_OK);
    }

    #[test]
    fn resolve_logs_normalization() {
        let out = call("resolve --type C --rank 2 --element w:0,1 --right 1,2 --output json");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stderr.contains("minimal representative"));
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["normalized"], json!(true));
        assert_eq!(v["word"], json!([0]));
    }

    #[test]
    fn verify_passes_on_small_inputs() {
        for args in [
            "length --type C --rank 2 --element t:-1,0|id --verify",
            "word --type A --rank 2 --element w:0,1,2,0 --verify",
            "mult --type C --rank 2 --element w:0,1 --other w:1,2 --verify",
            "bruhat --type C --rank 2 --element w:0 --other w:1,0 --verify",
            "min-rep --type C --rank 2 --element w:1,0,2,1 --left 1 --right 2 --verify",
            "maxmin-rep --type C --rank 2 --element t:1,0|id --left 1,2 --right 1,2 --verify",
            "wald-length --type C --rank 2 --element w:0,2 --left 1 --right 0 --verify",
            "strata --type A --rank 2 --element w:0,1,2 --left 1 --verify",
            "resolve --type A --rank 2 --element t:-1,0,1|id --right 1,2 --verify",
            "enumerate --type C --rank 2 --left 1,2 --right 1,2 --bound 6 --verify",
            "unitary 2 2 --verify",
        ] {
            let out = call(args);
            assert_eq!(out.code, 0, "{args}: {}", out.stderr);
        }
    }
}
