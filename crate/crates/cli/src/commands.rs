//! Command dispatch.

use clap::{Args, Subcommand};
use homlie::complex::{check_cochain, circle, coboundary, mc_check, nr_bracket, Cochain, CochainKind};
use homlie::deformation::{
    check_linear_deformation, check_order_k, extend_order, obstruction, search_ooperators, DeformationSequence,
};
use homlie::operator::{
    check_hom_pre_lie, check_ooperator, check_rota_baxter, delta_t, graded_bracket, n_from_t, nijenhuis_check,
    pre_lie_from, rho_t, subadjacent,
};
use homlie::structures::{adjoint_rep, check_hom_lie, check_representation, semidirect};
use homlie::{HomLieConformalAlgebra, ModuleMap, PolyVector, Rational, Report, Representation};

use crate::document::ReportDocument;
use crate::workspace::{cochain_values, Endpoint, InputError, MapSource, Workspace};

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Verify axioms or defining identities.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Coboundary of a cochain.
    Cobound { cochain: String },
    /// Circle product of two algebra cochains.
    Circle { f: String, g: String },
    /// Nijenhuis-Richardson bracket of two algebra cochains.
    Nrbracket { f: String, g: String },
    /// Maurer-Cartan check of an algebra together with a module.
    Mc { module: String },
    /// Graded bracket of two module-to-algebra cochains.
    Gbracket { f: String, g: String },
    /// The differential of an O-operator applied to a cochain.
    #[command(name = "deltaT")]
    DeltaT { map: String, cochain: String },
    /// Pre-Lie structure, sub-adjacent algebra and representation induced by an O-operator.
    Prelie { map: String },
    /// Formal deformations of O-operators.
    #[command(subcommand)]
    Deform(DeformCommand),
    /// Enumerate O-operators with coefficients from a finite set.
    #[command(name = "search-oop")]
    SearchOop(SearchArgs),
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum CheckCommand {
    Algebra { algebra: String },
    Rep { module: String },
    Oop {
        map: String,
        /// Check against this module instead of the map's own source.
        #[arg(long)]
        module: Option<String>,
    },
    Rotabaxter {
        map: String,
        #[arg(long)]
        p: u32,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    Nijenhuis { map: String },
    Cochain { cochain: String },
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum DeformCommand {
    Check { name: String },
    Obstruct { name: String },
    Extend {
        name: String,
        #[arg(long)]
        max_deg: u32,
    },
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct SearchArgs {
    pub module: String,
    #[arg(long)]
    pub max_deg: u32,
    /// Comma-separated rationals, e.g. `-1,0,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
}

impl Command {
    /// The canonical echo of the command line.
    pub fn echo(&self) -> String {
        match self {
            Command::Check(c) => match c {
                CheckCommand::Algebra { algebra } => format!("check algebra {algebra}"),
                CheckCommand::Rep { module } => format!("check rep {module}"),
                CheckCommand::Oop { map, module: None } => format!("check oop {map}"),
                CheckCommand::Oop { map, module: Some(m) } => format!("check oop {map} --module {m}"),
                CheckCommand::Rotabaxter { map, p, q } => format!("check rotabaxter {map} --p {p} --q {q}"),
                CheckCommand::Nijenhuis { map } => format!("check nijenhuis {map}"),
                CheckCommand::Cochain { cochain } => format!("check cochain {cochain}"),
            },
            Command::Cobound { cochain } => format!("cobound {cochain}"),
            Command::Circle { f, g } => format!("circle {f} {g}"),
            Command::Nrbracket { f, g } => format!("nrbracket {f} {g}"),
            Command::Mc { module } => format!("mc {module}"),
            Command::Gbracket { f, g } => format!("gbracket {f} {g}"),
            Command::DeltaT { map, cochain } => format!("deltaT {map} {cochain}"),
            Command::Prelie { map } => format!("prelie {map}"),
            Command::Deform(d) => match d {
                DeformCommand::Check { name } => format!("deform check {name}"),
                DeformCommand::Obstruct { name } => format!("deform obstruct {name}"),
                DeformCommand::Extend { name, max_deg } => format!("deform extend {name} --max-deg {max_deg}"),
            },
            Command::SearchOop(s) => format!("search-oop {} --max-deg {} --coeffs {}", s.module, s.max_deg, s.coeffs),
        }
    }
}

fn rational(text: &str) -> Result<Rational, InputError> {
    homlie::parse_poly(text.trim(), &[])
        .ok()
        .and_then(|p| p.as_constant())
        .ok_or_else(|| InputError::Usage(format!("`{text}` is not a rational number")))
}

/// The algebra, the module (the adjoint one for `L -> L` maps) and the
/// matrix of a map.
fn map_context<'a>(
    ws: &'a Workspace,
    name: &str,
    module: Option<&str>,
) -> Result<(&'a HomLieConformalAlgebra, Representation, &'a ModuleMap), InputError> {
    let map = ws.map(name)?;
    let alg = &ws.algebra(&map.algebra)?.algebra;
    let rep = match (module, &map.source) {
        (Some(m), _) => {
            let nm = ws.module(m)?;
            if nm.algebra != map.algebra {
                return Err(InputError::Usage(format!("module `{m}` is not over `{}`", map.algebra)));
            }
            nm.module.clone()
        }
        (None, MapSource::Module(m)) => ws.module(m)?.module.clone(),
        (None, MapSource::Algebra) => adjoint_rep(alg, 0),
    };
    if rep.mrank() != map.matrix.cols() {
        return Err(InputError::Usage(format!(
            "map `{name}` has {} columns, module rank is {}",
            map.matrix.cols(),
            rep.mrank()
        )));
    }
    Ok((alg, rep, &map.matrix))
}

/// The algebra and module a cochain lives over.
fn cochain_context<'a>(ws: &'a Workspace, name: &str) -> Result<(&'a HomLieConformalAlgebra, Representation, &'a Cochain), InputError> {
    let c = ws.cochain(name)?;
    let (alg, rep) = match (&c.source, &c.target) {
        (Endpoint::Algebra(a), Endpoint::Algebra(_)) => {
            let alg = &ws.algebra(a)?.algebra;
            (alg, adjoint_rep(alg, 0))
        }
        (Endpoint::Algebra(a), Endpoint::Module(m)) | (Endpoint::Module(m), Endpoint::Algebra(a)) => {
            (&ws.algebra(a)?.algebra, ws.module(m)?.module.clone())
        }
        (Endpoint::Module(_), Endpoint::Module(_)) => {
            return Err(InputError::Usage(format!("cochain `{name}` has no algebra endpoint")))
        }
    };
    Ok((alg, rep, &c.cochain))
}

fn require_kind(name: &str, c: &Cochain, kind: CochainKind) -> Result<(), InputError> {
    if c.kind() != kind {
        return Err(InputError::Usage(format!(
            "cochain `{name}` is {}, expected {}",
            c.kind().as_str(),
            kind.as_str()
        )));
    }
    Ok(())
}

fn cochain_lines(c: &Cochain) -> Vec<String> {
    let mut lines = vec![format!("degree {}", c.degree())];
    lines.extend(cochain_values(c).lines().map(str::to_string));
    if c.is_zero() && c.degree() > 0 {
        lines.push("zero".into());
    }
    lines
}

fn table_lines(keyword: &str, table: &[Vec<PolyVector>]) -> Vec<String> {
    let mut out = Vec::new();
    for (i, row) in table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                out.push(format!("{keyword} {} {} : {v}", i + 1, j + 1));
            }
        }
    }
    out
}

/// A report whose single check records that an output cochain is
/// well formed.
fn computed(c: &Cochain) -> Report {
    check_cochain(c)
}

/// Runs the O-operator check first; a failing map short-circuits the command.
fn ensure_ooperator(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<Option<Report>, InputError> {
    let r = check_ooperator(alg, rep, t)?;
    Ok(if r.passed() { None } else { Some(prefixed("ooperator.", r)) })
}

fn prefixed(prefix: &str, r: Report) -> Report {
    let mut out = Report::new();
    out.absorb(prefix, r);
    out
}

fn sequence<'a>(ws: &'a Workspace, name: &str) -> Result<(&'a HomLieConformalAlgebra, Representation, DeformationSequence), InputError> {
    let d = ws.deformation(name)?;
    let (alg, rep, base) = map_context(ws, &d.maps[0], None)?;
    let higher = d.maps[1..]
        .iter()
        .map(|m| Ok(ws.map(m)?.matrix.clone()))
        .collect::<Result<Vec<_>, InputError>>()?;
    Ok((alg, rep, DeformationSequence::new(base.clone(), higher)?))
}

/// Runs `command` against `ws`. Input errors are returned as `Err` and map
/// to exit code 2.
pub fn run(command: &Command, ws: &Workspace, all_witnesses: bool) -> Result<ReportDocument, InputError> {
    let (report, result) = dispatch(command, ws)?;
    Ok(ReportDocument::new(command.echo(), &report, result, all_witnesses))
}

fn dispatch(command: &Command, ws: &Workspace) -> Result<(Report, Vec<String>), InputError> {
    match command {
        Command::Check(c) => dispatch_check(c, ws),
        Command::Cobound { cochain } => {
            let (alg, rep, c) = cochain_context(ws, cochain)?;
            if c.kind() == CochainKind::ModuleToAlgebra {
                return Err(InputError::Usage(format!(
                    "cochain `{cochain}` maps a module to the algebra; use deltaT"
                )));
            }
            let out = coboundary(alg, &rep, c)?;
            Ok((computed(&out), cochain_lines(&out)))
        }
        Command::Circle { f, g } | Command::Nrbracket { f, g } => {
            let cf = &ws.cochain(f)?.cochain;
            let cg = &ws.cochain(g)?.cochain;
            require_kind(f, cf, CochainKind::AlgebraToAlgebra)?;
            require_kind(g, cg, CochainKind::AlgebraToAlgebra)?;
            let out = if matches!(command, Command::Circle { .. }) {
                circle(cf, cg)?
            } else {
                nr_bracket(cf, cg)?
            };
            Ok((computed(&out), cochain_lines(&out)))
        }
        Command::Mc { module } => {
            let m = ws.module(module)?;
            let alg = &ws.algebra(&m.algebra)?.algebra;
            Ok((mc_check(alg, &m.module), Vec::new()))
        }
        Command::Gbracket { f, g } => {
            let (alg, rep, cf) = cochain_context(ws, f)?;
            let cg = &ws.cochain(g)?.cochain;
            require_kind(f, cf, CochainKind::ModuleToAlgebra)?;
            require_kind(g, cg, CochainKind::ModuleToAlgebra)?;
            let out = graded_bracket(alg, &rep, cf, cg)?;
            Ok((computed(&out), cochain_lines(&out)))
        }
        Command::DeltaT { map, cochain } => {
            let (alg, rep, t) = map_context(ws, map, None)?;
            let c = &ws.cochain(cochain)?.cochain;
            require_kind(cochain, c, CochainKind::ModuleToAlgebra)?;
            if let Some(r) = ensure_ooperator(alg, &rep, t)? {
                return Ok((r, Vec::new()));
            }
            let out = delta_t(alg, &rep, t, c)?;
            Ok((computed(&out), cochain_lines(&out)))
        }
        Command::Prelie { map } => {
            let (alg, rep, t) = map_context(ws, map, None)?;
            if let Some(r) = ensure_ooperator(alg, &rep, t)? {
                return Ok((r, Vec::new()));
            }
            let pl = pre_lie_from(alg, &rep, t)?;
            let sub = subadjacent(&pl);
            let rt = rho_t(alg, &rep, t)?;
            let mut report = prefixed("prelie.", check_hom_pre_lie(&pl));
            report.absorb("subadjacent.", check_hom_lie(&sub));
            report.absorb("rho_t.", check_representation(&sub, &rt));
            let mut lines = table_lines("product", &pl.product);
            lines.extend(table_lines("bracket", &sub.bracket));
            lines.extend(table_lines("action", &rt.action));
            Ok((report, lines))
        }
        Command::Deform(d) => dispatch_deform(d, ws),
        Command::SearchOop(s) => {
            let m = ws.module(&s.module)?;
            let alg = &ws.algebra(&m.algebra)?.algebra;
            let coeffs = s.coeffs.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
            let found = search_ooperators(alg, &m.module, s.max_deg, &coeffs)?;
            let mut report = Report::new();
            let mut lines = vec![format!("candidates {}", found.candidates.len())];
            for (k, t) in found.candidates.iter().enumerate() {
                report.absorb(&format!("candidate-{}.", k + 1), check_ooperator(alg, &m.module, t)?);
                lines.push(format!("matrix {t}"));
            }
            Ok((report, lines))
        }
    }
}

fn dispatch_check(c: &CheckCommand, ws: &Workspace) -> Result<(Report, Vec<String>), InputError> {
    let report = match c {
        CheckCommand::Algebra { algebra } => check_hom_lie(&ws.algebra(algebra)?.algebra),
        CheckCommand::Rep { module } => {
            let m = ws.module(module)?;
            check_representation(&ws.algebra(&m.algebra)?.algebra, &m.module)
        }
        CheckCommand::Oop { map, module } => {
            let (alg, rep, t) = map_context(ws, map, module.as_deref())?;
            check_ooperator(alg, &rep, t)?
        }
        CheckCommand::Rotabaxter { map, p, q } => {
            let m = ws.map(map)?;
            if m.source != MapSource::Algebra {
                return Err(InputError::Usage(format!("map `{map}` is not an endomorphism of `{}`", m.algebra)));
            }
            check_rota_baxter(&ws.algebra(&m.algebra)?.algebra, &m.matrix, *p, &rational(q)?)?
        }
        CheckCommand::Nijenhuis { map } => {
            let m = ws.map(map)?;
            let alg = &ws.algebra(&m.algebra)?.algebra;
            match &m.source {
                MapSource::Algebra => nijenhuis_check(alg, &m.matrix)?,
                MapSource::Module(name) => {
                    let rep = &ws.module(name)?.module;
                    nijenhuis_check(&semidirect(alg, rep), &n_from_t(&m.matrix))?
                }
            }
        }
        CheckCommand::Cochain { cochain } => check_cochain(&ws.cochain(cochain)?.cochain),
    };
    Ok((report, Vec::new()))
}

fn dispatch_deform(d: &DeformCommand, ws: &Workspace) -> Result<(Report, Vec<String>), InputError> {
    let name = match d {
        DeformCommand::Check { name } | DeformCommand::Obstruct { name } | DeformCommand::Extend { name, .. } => name,
    };
    let (alg, rep, s) = sequence(ws, name)?;
    if let Some(r) = ensure_ooperator(alg, &rep, s.base())? {
        return Ok((r, Vec::new()));
    }
    match d {
        DeformCommand::Check { .. } => {
            if s.order() == 1 {
                Ok((check_linear_deformation(alg, &rep, s.base(), &s.term(1))?, Vec::new()))
            } else {
                Ok((check_order_k(alg, &rep, &s)?, Vec::new()))
            }
        }
        DeformCommand::Obstruct { .. } => {
            let orders = check_order_k(alg, &rep, &s)?;
            if !orders.passed() {
                return Ok((orders, Vec::new()));
            }
            let ob = obstruction(alg, &rep, &s)?;
            let dob = delta_t(alg, &rep, s.base(), &ob)?;
            let mut report = orders;
            let named = |c: &Cochain| -> Vec<(Vec<String>, PolyVector)> {
                c.tuples().into_iter().map(|t| (c.tuple_names(&t), c.get(&t).clone())).collect()
            };
            report.record("obstruction-cocycle", true, &alg.basis, named(&dob));
            report.record("obstruction-vanishes", false, &alg.basis, named(&ob));
            Ok((report, cochain_lines(&ob)))
        }
        DeformCommand::Extend { max_deg, .. } => {
            let orders = check_order_k(alg, &rep, &s)?;
            if !orders.passed() {
                return Ok((orders, Vec::new()));
            }
            let mut report = Report::new();
            match extend_order(alg, &rep, &s, *max_deg)? {
                Some(x) => {
                    let ext = s.extended(x.clone())?;
                    report.absorb("extended.", check_order_k(alg, &rep, &ext)?);
                    Ok((report, vec![format!("matrix {x}")]))
                }
                None => {
                    report.record_flag("extendable", true, false);
                    Ok((report, vec![format!("no extension with d-degree <= {max_deg}")]))
                }
            }
        }
    }
}
