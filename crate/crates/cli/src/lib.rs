//! Front end for the `bracketwidth` binary: curve descriptions, job
//! execution and the JSON result document.

use std::fmt;

use bracket_width::decompose::Trace;
use bracket_width::poly::{parse_fraction, parse_poly};
use bracket_width::{
    localize_decomp, rational_decompose_traced, single_bracket_line, three_bracket_space_traced,
    two_bracket_plane_traced, verify, BracketDecomp, Budget, Coeff, Curve, Error,
    MembershipCertificate, MonomialOrder, Poly, VField, Var,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Decompose,
    Localize,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Decompose => "decompose",
            Command::Localize => "localize",
            Command::Verify => "verify",
        }
    }
}

/// One invocation's worth of input.
#[derive(Debug, Clone)]
pub struct Job {
    pub command: Command,
    pub curve: String,
    pub target: Option<String>,
    pub pairs: Vec<String>,
    pub k: u32,
    pub order: MonomialOrder,
    pub trace: bool,
    pub max_steps: u64,
}

impl Job {
    pub fn new(command: Command, curve: &str) -> Self {
        Job {
            command,
            curve: curve.to_owned(),
            target: None,
            pairs: Vec::new(),
            k: 1,
            order: MonomialOrder::Lex,
            trace: false,
            max_steps: bracket_width::DEFAULT_MAX_STEPS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("curve description: {0}")]
    Syntax(String),
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("the decomposition does not sum to the target")]
    VerificationFailed,
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Syntax(_) => "CurveSyntax",
            CliError::Missing(_) => "MissingArgument",
            CliError::VerificationFailed => "VerificationFailed",
            CliError::Core(e) => match e {
                Error::Parse { .. } => "Parse",
                Error::ZeroDivisor => "ZeroDivisor",
                Error::NotPolynomial => "NotPolynomial",
                Error::StepBudgetExceeded { .. } => "StepBudgetExceeded",
                Error::NotSmooth => "NotSmooth",
                Error::BadVariables { .. } => "BadVariables",
                Error::ConstantPolynomial => "ConstantPolynomial",
                Error::DoesNotPreserveIdeal => "DoesNotPreserveIdeal",
                Error::UnitCertificateAbsent => "UnitCertificateAbsent",
                Error::ZeroTau => "ZeroTau",
                Error::CurveMismatch => "CurveMismatch",
                Error::WrongCurveKind { .. } => "WrongCurveKind",
                Error::NotInLocalization => "NotInLocalization",
                Error::CertificateFailure => "CertificateFailure",
            },
        }
    }

    /// 2 for malformed input, 4 for an exhausted budget, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax(_)
            | CliError::Missing(_)
            | CliError::Core(Error::Parse { .. } | Error::NotPolynomial) => 2,
            CliError::Core(Error::StepBudgetExceeded { .. }) => 4,
            _ => 3,
        }
    }
}

/// Parsed form of a curve description, before any validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveSpec {
    Line,
    LineMinus(Poly),
    Plane(Poly),
    Space {
        generators: Vec<Poly>,
        tau: [Poly; 3],
    },
}

fn strip_keyword<'a>(s: &'a str, kw: &str) -> Option<&'a str> {
    let rest = s.strip_prefix(kw)?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest.trim_start())
    } else {
        None
    }
}

/// `line` | `line minus <f>` | `plane <F>` | `space <g1>; <g2> ... tau <P>, <Q>, <R>`
pub fn parse_curve_spec(text: &str) -> Result<CurveSpec, CliError> {
    let s = text.trim();
    if let Some(rest) = strip_keyword(s, "line") {
        if rest.is_empty() {
            return Ok(CurveSpec::Line);
        }
        let f = strip_keyword(rest, "minus")
            .filter(|f| !f.is_empty())
            .ok_or_else(|| CliError::Syntax("expected `line` or `line minus <f>`".into()))?;
        return Ok(CurveSpec::LineMinus(parse_poly(f)?));
    }
    if let Some(rest) = strip_keyword(s, "plane") {
        if rest.is_empty() {
            return Err(CliError::Syntax("`plane` needs an equation".into()));
        }
        return Ok(CurveSpec::Plane(parse_poly(rest)?));
    }
    if let Some(rest) = strip_keyword(s, "space") {
        let (gens, tau) = rest
            .split_once("tau")
            .ok_or_else(|| CliError::Syntax("`space` needs `tau <P>, <Q>, <R>`".into()))?;
        let generators = gens
            .split(';')
            .map(str::trim)
            .filter(|g| !g.is_empty())
            .map(parse_poly)
            .collect::<Result<Vec<_>, _>>()?;
        if generators.is_empty() {
            return Err(CliError::Syntax(
                "`space` needs at least one generator".into(),
            ));
        }
        let comps = tau
            .split(',')
            .map(parse_poly)
            .collect::<Result<Vec<_>, _>>()?;
        let tau: [Poly; 3] = comps
            .try_into()
            .map_err(|_| CliError::Syntax("tau needs exactly three components".into()))?;
        return Ok(CurveSpec::Space { generators, tau });
    }
    Err(CliError::Syntax(
        "expected `line`, `line minus`, `plane` or `space`".into(),
    ))
}

impl CurveSpec {
    pub fn build(&self, order: MonomialOrder, budget: &mut Budget) -> Result<Curve, CliError> {
        Ok(match self {
            CurveSpec::Line => Curve::line(),
            CurveSpec::LineMinus(f) => Curve::line_minus(f.clone())?,
            CurveSpec::Plane(f) => Curve::plane_with(f.clone(), order, budget)?,
            CurveSpec::Space { generators, tau } => {
                Curve::space_with(generators, tau.clone(), order, budget)?
            }
        })
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveSpec::Line => write!(f, "line"),
            CurveSpec::LineMinus(p) => write!(f, "line minus {p}"),
            CurveSpec::Plane(p) => write!(f, "plane {p}"),
            CurveSpec::Space { generators, tau } => {
                write!(f, "space ")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, " tau {}, {}, {}", tau[0], tau[1], tau[2])
            }
        }
    }
}

/// Reads a coefficient for `curve`; fractions are allowed on a localized line.
pub fn parse_coeff(curve: &Curve, text: &str) -> Result<Coeff, CliError> {
    match curve.localization() {
        Some(loc) => {
            let (num, den) = parse_fraction(text)?;
            if !num.only_uses(&[Var::X]) || !den.only_uses(&[Var::X]) {
                return Err(Error::BadVariables { allowed: "{x}" }.into());
            }
            Ok(Coeff::Local(loc.from_fraction(&num, &den)?))
        }
        None => Ok(curve.elem(&parse_poly(text)?)?),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateDoc {
    pub target: String,
    pub generators: Vec<String>,
    pub cofactors: Vec<String>,
}

impl From<&MembershipCertificate> for CertificateDoc {
    fn from(c: &MembershipCertificate) -> Self {
        let show = |ps: &[Poly]| ps.iter().map(Poly::to_string).collect();
        CertificateDoc {
            target: c.target().to_string(),
            generators: show(c.generators()),
            cofactors: show(c.cofactors()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceDoc {
    pub steps: Vec<TraceStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub name: String,
    pub value: String,
}

impl From<&Trace> for TraceDoc {
    fn from(t: &Trace) -> Self {
        TraceDoc {
            steps: t
                .steps
                .iter()
                .map(|(n, p)| TraceStep {
                    name: (*n).to_owned(),
                    value: p.to_string(),
                })
                .collect(),
            k: t.k,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorDoc {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// The JSON document written to standard output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultDoc {
    pub status: Status,
    pub command: String,
    pub curve: String,
    pub kind: Option<String>,
    pub target: Option<String>,
    pub decomposition: Option<Vec<[String; 2]>>,
    pub length: Option<usize>,
    pub verification: Option<bool>,
    pub trace: Option<TraceDoc>,
    pub certificate: Option<CertificateDoc>,
    pub warnings: Vec<String>,
    pub error: Option<ErrorDoc>,
}

impl ResultDoc {
    fn empty(job: &Job) -> Self {
        ResultDoc {
            status: Status::Ok,
            command: job.command.name().to_owned(),
            curve: job.curve.trim().to_owned(),
            kind: None,
            target: None,
            decomposition: None,
            length: None,
            verification: None,
            trace: None,
            certificate: None,
            warnings: Vec::new(),
            error: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        if let Some(e) = &self.error {
            return format!("{}: error {}: {}", self.command, e.code, e.message);
        }
        let mut out = format!("{}: ok on {}", self.command, self.curve);
        if let Some(t) = &self.target {
            out += &format!("\n  target: ({t})·τ");
        }
        if let Some(pairs) = &self.decomposition {
            for [a, b] in pairs {
                out += &format!("\n  + [({a})·τ, ({b})·τ]");
            }
        }
        if let Some(n) = self.length {
            out += &format!("\n  brackets: {n}");
        }
        if let Some(v) = self.verification {
            out += &format!("\n  verified: {v}");
        }
        out
    }
}

fn pair_texts(curve: &Curve, d: &BracketDecomp<'_>) -> Vec<[String; 2]> {
    d.pairs()
        .iter()
        .map(|(a, b)| {
            [
                curve.display_coeff(a.coeff()).to_string(),
                curve.display_coeff(b.coeff()).to_string(),
            ]
        })
        .collect()
}

fn record_decomposition(
    doc: &mut ResultDoc,
    curve: &Curve,
    d: &BracketDecomp<'_>,
    target: &Coeff,
) -> Result<(), CliError> {
    let ok = verify(d, target)?;
    doc.target = Some(curve.display_coeff(target).to_string());
    doc.decomposition = Some(pair_texts(curve, d));
    doc.length = Some(d.len());
    doc.verification = Some(ok);
    if ok {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

fn execute(job: &Job, doc: &mut ResultDoc) -> Result<(), CliError> {
    let spec = parse_curve_spec(&job.curve)?;
    doc.curve = spec.to_string();
    let mut budget = Budget::new(job.max_steps);
    let curve = spec.build(job.order, &mut budget)?;
    doc.kind = Some(curve.kind().to_owned());
    if let Some(loc) = curve.localization() {
        if !loc.is_squarefree() {
            doc.warnings.push(format!(
                "{} is not squarefree; the ring only depends on its radical",
                loc.f()
            ));
        }
    }
    let target_text = || job.target.as_deref().ok_or(CliError::Missing("--target"));

    match job.command {
        Command::Check => {
            doc.certificate = match &curve {
                Curve::Plane { smooth_cert, .. } => Some(smooth_cert.into()),
                Curve::Space(model) => Some(model.unit_cert().into()),
                _ => None,
            };
            doc.verification = Some(doc.certificate.is_none() || curve_cert_ok(&curve));
        }
        Command::Decompose => {
            let target = parse_coeff(&curve, target_text()?)?;
            let (d, trace) = match &curve {
                Curve::AffineLine => (single_bracket_line(&curve, &target)?, Trace::default()),
                Curve::LocalizedLine(_) => {
                    let h = target.as_local().ok_or(Error::NotInLocalization)?;
                    rational_decompose_traced(&curve, h)?
                }
                Curve::Plane { .. } => two_bracket_plane_traced(&curve, &target)?,
                Curve::Space(_) => three_bracket_space_traced(&curve, &target)?,
            };
            if job.trace {
                doc.trace = Some((&trace).into());
            }
            record_decomposition(doc, &curve, &d, &target)?;
        }
        Command::Localize => {
            let loc = curve.localization().ok_or(Error::WrongCurveKind {
                expected: "localized line",
            })?;
            let line = Curve::line();
            let g = parse_poly(target_text()?)?;
            let on_line = single_bracket_line(&line, &line.elem(&g)?)?;
            let d = localize_decomp(&on_line, &curve, job.k)?;
            let target = Coeff::Local(loc.elem(g.clone(), 2 * job.k));
            if job.trace {
                doc.trace = Some(TraceDoc {
                    steps: vec![TraceStep {
                        name: "g".into(),
                        value: g.to_string(),
                    }],
                    k: Some(job.k),
                });
            }
            record_decomposition(doc, &curve, &d, &target)?;
        }
        Command::Verify => {
            let target = parse_coeff(&curve, target_text()?)?;
            let mut d = BracketDecomp::new(&curve);
            for pair in &job.pairs {
                let (a, b) = pair.split_once(',').ok_or_else(|| {
                    CliError::Syntax(format!("pair `{pair}` should read `<a>, <b>`"))
                })?;
                let a = VField::new(&curve, &parse_coeff(&curve, a)?)?;
                let b = VField::new(&curve, &parse_coeff(&curve, b)?)?;
                d.push(a, b)?;
            }
            record_decomposition(doc, &curve, &d, &target)?;
        }
    }
    Ok(())
}

fn curve_cert_ok(curve: &Curve) -> bool {
    match curve {
        Curve::Plane { smooth_cert, .. } => smooth_cert.verify(),
        Curve::Space(model) => model.unit_cert().verify(),
        _ => true,
    }
}

/// Runs `job` and returns the result document with the process exit code.
pub fn run(job: &Job) -> (ResultDoc, i32) {
    let mut doc = ResultDoc::empty(job);
    match execute(job, &mut doc) {
        Ok(()) => (doc, 0),
        Err(e) => {
            doc.status = Status::Error;
            doc.error = Some(ErrorDoc {
                code: e.code().to_owned(),
                message: e.to_string(),
            });
            (doc, e.exit_code())
        }
    }
}
