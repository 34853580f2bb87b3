//! The line-oriented workspace format.
//!
//! ```text
//! algebra vir
//! rank 1
//! bracket 1 1 : d + 2*l
//!
//! module M over vir
//! rank 1
//! action 1 1 : d + l
//!
//! map T1 : M -> vir
//! matrix 1
//! ```

use std::fmt::Write as _;

use homlie::complex::{Cochain, CochainKind};
use homlie::matrix::PolyMatrix;
use homlie::parse::parse_poly;
use homlie::{HomLieConformalAlgebra, MultiPoly, PolyVector, Representation, Space, Var};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unresolved reference `{0}`")]
    UnresolvedReference(String),
    #[error("line {line}: rank mismatch: {msg}")]
    RankMismatch { line: usize, msg: String },
    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: homlie::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] homlie::Error),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

/// Where a map points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MapSource {
    Module(String),
    Algebra,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedAlgebra {
    pub name: String,
    pub algebra: HomLieConformalAlgebra,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedModule {
    pub name: String,
    pub algebra: String,
    pub module: Representation,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedMap {
    pub name: String,
    pub source: MapSource,
    pub algebra: String,
    pub matrix: PolyMatrix,
}

/// An endpoint of a cochain: an algebra or a module, by name.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Endpoint {
    Algebra(String),
    Module(String),
}

impl Endpoint {
    pub fn name(&self) -> &str {
        match self {
            Endpoint::Algebra(n) | Endpoint::Module(n) => n,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedCochain {
    pub name: String,
    pub source: Endpoint,
    pub target: Endpoint,
    pub cochain: Cochain,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedDeformation {
    pub name: String,
    pub maps: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Workspace {
    pub algebras: Vec<NamedAlgebra>,
    pub modules: Vec<NamedModule>,
    pub maps: Vec<NamedMap>,
    pub cochains: Vec<NamedCochain>,
    pub deformations: Vec<NamedDeformation>,
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    if n == 1 {
        vec![prefix.to_string()]
    } else {
        homlie::structures::default_basis(prefix, n)
    }
}

impl Workspace {
    pub fn algebra(&self, name: &str) -> Result<&NamedAlgebra, InputError> {
        self.algebras
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| InputError::UnresolvedReference(name.to_string()))
    }

    pub fn module(&self, name: &str) -> Result<&NamedModule, InputError> {
        self.modules
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| InputError::UnresolvedReference(name.to_string()))
    }

    pub fn map(&self, name: &str) -> Result<&NamedMap, InputError> {
        self.maps
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| InputError::UnresolvedReference(name.to_string()))
    }

    pub fn cochain(&self, name: &str) -> Result<&NamedCochain, InputError> {
        self.cochains
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| InputError::UnresolvedReference(name.to_string()))
    }

    pub fn deformation(&self, name: &str) -> Result<&NamedDeformation, InputError> {
        self.deformations
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| InputError::UnresolvedReference(name.to_string()))
    }

    /// Serializes back to the input format; [`parse_spec`] reads the
    /// result to an equal workspace.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.algebras {
            let alg = &a.algebra;
            let _ = writeln!(out, "algebra {}", a.name);
            let _ = writeln!(out, "rank {}", alg.rank());
            let _ = writeln!(out, "basis {}", alg.basis.join(" "));
            let _ = writeln!(out, "alpha {}", alg.alpha);
            for (i, row) in alg.bracket.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        let _ = writeln!(out, "bracket {} {} : {v}", i + 1, j + 1);
                    }
                }
            }
            out.push('\n');
        }
        for m in &self.modules {
            let rep = &m.module;
            let _ = writeln!(out, "module {} over {}", m.name, m.algebra);
            let _ = writeln!(out, "rank {}", rep.mrank());
            let _ = writeln!(out, "basis {}", rep.mbasis.join(" "));
            let _ = writeln!(out, "beta {}", rep.beta);
            for (i, row) in rep.action.iter().enumerate() {
                for (a, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        let _ = writeln!(out, "action {} {} : {v}", i + 1, a + 1);
                    }
                }
            }
            out.push('\n');
        }
        for m in &self.maps {
            let src = match &m.source {
                MapSource::Module(n) => n.as_str(),
                MapSource::Algebra => m.algebra.as_str(),
            };
            let _ = writeln!(out, "map {} : {src} -> {}", m.name, m.algebra);
            let _ = writeln!(out, "matrix {}", m.matrix);
            out.push('\n');
        }
        for c in &self.cochains {
            let _ = writeln!(
                out,
                "cochain {} degree {} : {} -> {}",
                c.name,
                c.cochain.degree(),
                c.source.name(),
                c.target.name()
            );
            out.push_str(&cochain_values(&c.cochain));
            out.push('\n');
        }
        for d in &self.deformations {
            let _ = writeln!(out, "deformation {} : {}", d.name, d.maps.join(" + "));
        }
        out
    }
}

/// The `value` lines of a cochain, skipping zero values.
pub fn cochain_values(c: &Cochain) -> String {
    let mut out = String::new();
    if c.degree() == 0 {
        let _ = writeln!(out, "value : {}", c.element());
        return out;
    }
    for t in c.tuples() {
        let v = c.get(&t);
        if v.is_zero() {
            continue;
        }
        let idx: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "value {} : {v}", idx.join(" "));
    }
    out
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn syntax(&self, col: usize, msg: impl Into<String>) -> InputError {
        InputError::Syntax {
            line: self.no,
            col,
            msg: msg.into(),
        }
    }

    fn col_of(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize + 1
    }

    fn words(&self) -> Vec<&'a str> {
        self.text.split_whitespace().collect()
    }

    /// Splits `head : tail` at the first colon.
    fn split_colon(&self) -> Result<(&'a str, &'a str), InputError> {
        let i = self
            .text
            .find(':')
            .ok_or_else(|| self.syntax(self.text.len() + 1, "expected `:`"))?;
        Ok((&self.text[..i], &self.text[i + 1..]))
    }

    fn poly(&self, part: &str, allowed: &[Var]) -> Result<MultiPoly, InputError> {
        let trimmed = part.trim();
        let base = if trimmed.is_empty() {
            self.col_of(part)
        } else {
            self.col_of(trimmed)
        };
        parse_poly(trimmed, allowed).map_err(|e| match e {
            homlie::Error::Syntax { pos, msg } => self.syntax(base + pos, msg),
            homlie::Error::UnknownVariable(v) => self.syntax(base, format!("variable `{v}` is not allowed here")),
            other => InputError::Invalid {
                line: self.no,
                source: other,
            },
        })
    }

    fn vector(&self, part: &str, allowed: &[Var], len: usize) -> Result<PolyVector, InputError> {
        let entries = part
            .split('|')
            .map(|p| self.poly(p, allowed))
            .collect::<Result<Vec<_>, _>>()?;
        if entries.len() != len {
            return Err(InputError::RankMismatch {
                line: self.no,
                msg: format!("expected {len} components, got {}", entries.len()),
            });
        }
        Ok(PolyVector::from_entries(entries))
    }

    fn matrix(&self, part: &str, rows: usize, cols: usize) -> Result<PolyMatrix, InputError> {
        let parsed = part
            .split(';')
            .map(|row| row.split(',').map(|p| self.poly(p, &[Var::D])).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
            return Err(InputError::RankMismatch {
                line: self.no,
                msg: format!("expected a {rows} x {cols} matrix"),
            });
        }
        let mut m = PolyMatrix::zero(rows, cols);
        for (i, row) in parsed.into_iter().enumerate() {
            for (j, p) in row.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        Ok(m)
    }

    fn index(&self, word: &str, bound: usize) -> Result<usize, InputError> {
        let col = self.col_of(word);
        let i: usize = word
            .parse()
            .map_err(|_| self.syntax(col, format!("expected an index, got `{word}`")))?;
        if i == 0 || i > bound {
            return Err(InputError::RankMismatch {
                line: self.no,
                msg: format!("index {i} out of range 1..={bound}"),
            });
        }
        Ok(i - 1)
    }
}

enum Header {
    Algebra { name: String },
    Module { name: String, over: String },
    Map { name: String, source: String, target: String },
    Cochain { name: String, degree: usize, source: String, target: String },
    Deformation { name: String, maps: Vec<String> },
}

struct Block<'a> {
    header: Line<'a>,
    body: Vec<Line<'a>>,
}

fn parse_header(line: &Line<'_>) -> Result<Header, InputError> {
    let w = line.words();
    let bad = |msg: &str| line.syntax(1, msg.to_string());
    match w[0] {
        "algebra" if w.len() == 2 => Ok(Header::Algebra { name: w[1].to_string() }),
        "algebra" => Err(bad("expected `algebra <name>`")),
        "module" if w.len() == 4 && w[2] == "over" => Ok(Header::Module {
            name: w[1].to_string(),
            over: w[3].to_string(),
        }),
        "module" => Err(bad("expected `module <name> over <algebra>`")),
        "map" => {
            if w.len() == 6 && w[2] == ":" && w[4] == "->" {
                Ok(Header::Map {
                    name: w[1].to_string(),
                    source: w[3].to_string(),
                    target: w[5].to_string(),
                })
            } else if w.len() == 6 && w[2] == ":" && w[3] == "->" && w[5] == "self" {
                Ok(Header::Map {
                    name: w[1].to_string(),
                    source: w[4].to_string(),
                    target: w[4].to_string(),
                })
            } else {
                Err(bad("expected `map <name> : <source> -> <algebra>`"))
            }
        }
        "cochain" => {
            if w.len() == 8 && w[2] == "degree" && w[4] == ":" && w[6] == "->" {
                let degree: usize = w[3]
                    .parse()
                    .ok()
                    .filter(|&p| p <= homlie::poly::MAX_LAMBDA + 1)
                    .ok_or_else(|| line.syntax(line.col_of(w[3]), "expected a degree between 0 and 10"))?;
                Ok(Header::Cochain {
                    name: w[1].to_string(),
                    degree,
                    source: w[5].to_string(),
                    target: w[7].to_string(),
                })
            } else {
                Err(bad("expected `cochain <name> degree <p> : <source> -> <target>`"))
            }
        }
        "deformation" => {
            let (head, tail) = line.split_colon()?;
            let hw: Vec<&str> = head.split_whitespace().collect();
            if hw.len() != 2 {
                return Err(bad("expected `deformation <name> : <map> + <map>`"));
            }
            let maps: Vec<String> = tail.split('+').map(|s| s.trim().to_string()).collect();
            if maps.len() < 2 || maps.iter().any(|m| m.is_empty() || m.contains(char::is_whitespace)) {
                return Err(line.syntax(line.col_of(tail), "expected `<map> + <map> [+ ...]`"));
            }
            Ok(Header::Deformation {
                name: hw[1].to_string(),
                maps,
            })
        }
        other => Err(line.syntax(1, format!("unknown keyword `{other}`"))),
    }
}

fn is_header(word: &str) -> bool {
    matches!(word, "algebra" | "module" | "map" | "cochain" | "deformation")
}

/// Collects `rank`, optional `basis`, and the twist line of a block.
struct Shape {
    rank: usize,
    basis: Option<Vec<String>>,
    twist: Option<PolyMatrix>,
}

fn read_shape(block: &Block<'_>, twist_kw: &str) -> Result<Shape, InputError> {
    let mut rank = None;
    let mut basis = None;
    let mut twist_line = None;
    for line in &block.body {
        let w = line.words();
        match w[0] {
            "rank" => {
                if w.len() != 2 {
                    return Err(line.syntax(1, "expected `rank <n>`"));
                }
                let n: usize = w[1]
                    .parse()
                    .map_err(|_| line.syntax(line.col_of(w[1]), "expected a positive integer"))?;
                if n == 0 {
                    return Err(line.syntax(line.col_of(w[1]), "rank must be positive"));
                }
                rank = Some(n);
            }
            "basis" => basis = Some(w[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>()),
            kw if kw == twist_kw => twist_line = Some(line),
            _ => {}
        }
    }
    let rank = rank.ok_or_else(|| block.header.syntax(1, "block has no `rank` line"))?;
    if let Some(b) = &basis {
        if b.len() != rank {
            return Err(InputError::RankMismatch {
                line: block.header.no,
                msg: format!("basis has {} names, rank is {rank}", b.len()),
            });
        }
    }
    let twist = match twist_line {
        Some(line) => {
            let rest = &line.text[line.text.find(twist_kw).unwrap() + twist_kw.len()..];
            Some(line.matrix(rest, rank, rank)?)
        }
        None => None,
    };
    Ok(Shape { rank, basis, twist })
}

fn check_keywords(block: &Block<'_>, allowed: &[&str]) -> Result<(), InputError> {
    for line in &block.body {
        let w = line.words()[0];
        if !allowed.contains(&w) {
            return Err(line.syntax(1, format!("unexpected `{w}` in this block")));
        }
    }
    Ok(())
}

fn table_entries<'a>(block: &'a Block<'a>, kw: &str) -> impl Iterator<Item = &'a Line<'a>> + 'a {
    let kw = kw.to_string();
    block.body.iter().filter(move |l| l.words()[0] == kw)
}

fn build_algebra(block: &Block<'_>, name: String) -> Result<NamedAlgebra, InputError> {
    check_keywords(block, &["rank", "basis", "alpha", "bracket"])?;
    let shape = read_shape(block, "alpha")?;
    let n = shape.rank;
    let mut bracket = vec![vec![PolyVector::zero(n); n]; n];
    for line in table_entries(block, "bracket") {
        let (head, tail) = line.split_colon()?;
        let w: Vec<&str> = head.split_whitespace().collect();
        if w.len() != 3 {
            return Err(line.syntax(1, "expected `bracket <i> <j> : ...`"));
        }
        let (i, j) = (line.index(w[1], n)?, line.index(w[2], n)?);
        bracket[i][j] = line.vector(tail, &[Var::D, Var::L], n)?;
    }
    let algebra = HomLieConformalAlgebra::new(
        shape.basis.unwrap_or_else(|| default_names("e", n)),
        bracket,
        shape.twist.unwrap_or_else(|| PolyMatrix::identity(n)),
    )
    .map_err(|source| InputError::Invalid {
        line: block.header.no,
        source,
    })?;
    Ok(NamedAlgebra { name, algebra })
}

fn build_module(ws: &Workspace, block: &Block<'_>, name: String, over: String) -> Result<NamedModule, InputError> {
    check_keywords(block, &["rank", "basis", "beta", "action"])?;
    let alg = &ws.algebra(&over)?.algebra;
    let shape = read_shape(block, "beta")?;
    let (n, m) = (alg.rank(), shape.rank);
    let mut action = vec![vec![PolyVector::zero(m); m]; n];
    for line in table_entries(block, "action") {
        let (head, tail) = line.split_colon()?;
        let w: Vec<&str> = head.split_whitespace().collect();
        if w.len() != 3 {
            return Err(line.syntax(1, "expected `action <i> <a> : ...`"));
        }
        let (i, a) = (line.index(w[1], n)?, line.index(w[2], m)?);
        action[i][a] = line.vector(tail, &[Var::D, Var::L], m)?;
    }
    let module = Representation::new(
        alg,
        shape.basis.unwrap_or_else(|| default_names("f", m)),
        action,
        shape.twist.unwrap_or_else(|| PolyMatrix::identity(m)),
    )
    .map_err(|source| InputError::Invalid {
        line: block.header.no,
        source,
    })?;
    Ok(NamedModule {
        name,
        algebra: over,
        module,
    })
}

fn build_map(ws: &Workspace, block: &Block<'_>, name: String, source: String, target: String) -> Result<NamedMap, InputError> {
    check_keywords(block, &["matrix"])?;
    let alg = &ws.algebra(&target)?.algebra;
    let (source, cols) = if source == target && ws.algebra(&source).is_ok() {
        (MapSource::Algebra, alg.rank())
    } else {
        let m = ws.module(&source)?;
        if m.algebra != target {
            return Err(InputError::Usage(format!(
                "module `{source}` is over `{}`, not `{target}`",
                m.algebra
            )));
        }
        (MapSource::Module(source), m.module.mrank())
    };
    let lines: Vec<&Line<'_>> = table_entries(block, "matrix").collect();
    let [line] = lines.as_slice() else {
        return Err(block.header.syntax(1, "map needs exactly one `matrix` line"));
    };
    let rest = &line.text[line.text.find("matrix").unwrap() + "matrix".len()..];
    let matrix = line.matrix(rest, alg.rank(), cols)?;
    Ok(NamedMap {
        name,
        source,
        algebra: target,
        matrix,
    })
}

fn endpoint(ws: &Workspace, name: &str) -> Result<(Endpoint, Space, Option<String>), InputError> {
    if let Ok(a) = ws.algebra(name) {
        return Ok((Endpoint::Algebra(name.to_string()), a.algebra.space(), None));
    }
    let m = ws.module(name)?;
    Ok((Endpoint::Module(name.to_string()), m.module.space(), Some(m.algebra.clone())))
}

fn build_cochain(
    ws: &Workspace,
    block: &Block<'_>,
    name: String,
    degree: usize,
    source: String,
    target: String,
) -> Result<NamedCochain, InputError> {
    check_keywords(block, &["value"])?;
    let (src, src_space, src_over) = endpoint(ws, &source)?;
    let (tgt, tgt_space, tgt_over) = endpoint(ws, &target)?;
    let kind = match (&src, &tgt) {
        (Endpoint::Algebra(a), Endpoint::Algebra(b)) if a == b => CochainKind::AlgebraToAlgebra,
        (Endpoint::Algebra(a), Endpoint::Module(_)) if tgt_over.as_deref() == Some(a) => CochainKind::AlgebraToModule,
        (Endpoint::Module(_), Endpoint::Algebra(b)) if src_over.as_deref() == Some(b) => CochainKind::ModuleToAlgebra,
        _ => {
            return Err(InputError::Usage(format!(
                "cochain `{name}`: unsupported endpoints `{source} -> {target}`"
            )))
        }
    };
    let mut allowed = vec![Var::D];
    allowed.extend(homlie::complex::lambda_vars(degree.saturating_sub(1)));
    if degree == 2 {
        allowed.push(Var::L);
    }
    let mut c = Cochain::zero(degree, kind, src_space.clone(), tgt_space.clone());
    let mut values = Vec::new();
    for line in table_entries(block, "value") {
        let (head, tail) = line.split_colon()?;
        let w: Vec<&str> = head.split_whitespace().collect();
        if w.len() != degree + 1 {
            return Err(line.syntax(1, format!("expected {degree} indices")));
        }
        let idx = w[1..]
            .iter()
            .map(|x| line.index(x, src_space.rank()))
            .collect::<Result<Vec<_>, _>>()?;
        let v = line
            .vector(tail, &allowed, tgt_space.rank())?
            .substitute(Var::L, &MultiPoly::lam(1));
        values.push((idx, v));
    }
    if degree == 0 {
        let v = values.pop().map(|(_, v)| v).unwrap_or_else(|| PolyVector::zero(tgt_space.rank()));
        c = Cochain::from_element(v, kind, src_space, tgt_space).map_err(|source| InputError::Invalid {
            line: block.header.no,
            source,
        })?;
    } else {
        for (idx, v) in values {
            c.set(&idx, v);
        }
        c = Cochain::new(degree, kind, src_space, tgt_space, c.table().to_vec()).map_err(|source| InputError::Invalid {
            line: block.header.no,
            source,
        })?;
    }
    Ok(NamedCochain {
        name,
        source: src,
        target: tgt,
        cochain: c,
    })
}

fn check_duplicate(ws: &Workspace, kind: &'static str, name: &str) -> Result<(), InputError> {
    let taken = match kind {
        "algebra" => ws.algebras.iter().any(|a| a.name == name),
        "module" => ws.modules.iter().any(|m| m.name == name),
        "map" => ws.maps.iter().any(|m| m.name == name),
        "cochain" => ws.cochains.iter().any(|c| c.name == name),
        _ => ws.deformations.iter().any(|d| d.name == name),
    };
    if taken {
        return Err(InputError::Duplicate {
            kind,
            name: name.to_string(),
        });
    }
    Ok(())
}

/// Parses and resolves a workspace. Only structural validation happens
/// here; axioms are checked by commands.
pub fn parse_spec(text: &str) -> Result<Workspace, InputError> {
    let mut blocks: Vec<Block<'_>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let line = Line { no: i + 1, text: content };
        let first = line.words()[0];
        if is_header(first) {
            blocks.push(Block { header: line, body: Vec::new() });
        } else {
            match blocks.last_mut() {
                Some(b) => b.body.push(line),
                None => return Err(line.syntax(1, format!("`{first}` outside of a block"))),
            }
        }
    }
    let mut ws = Workspace::default();
    for block in &blocks {
        match parse_header(&block.header)? {
            Header::Algebra { name } => {
                check_duplicate(&ws, "algebra", &name)?;
                let a = build_algebra(block, name)?;
                ws.algebras.push(a);
            }
            Header::Module { name, over } => {
                check_duplicate(&ws, "module", &name)?;
                let m = build_module(&ws, block, name, over)?;
                ws.modules.push(m);
            }
            Header::Map { name, source, target } => {
                check_duplicate(&ws, "map", &name)?;
                let m = build_map(&ws, block, name, source, target)?;
                ws.maps.push(m);
            }
            Header::Cochain {
                name,
                degree,
                source,
                target,
            } => {
                check_duplicate(&ws, "cochain", &name)?;
                let c = build_cochain(&ws, block, name, degree, source, target)?;
                ws.cochains.push(c);
            }
            Header::Deformation { name, maps } => {
                check_duplicate(&ws, "deformation", &name)?;
                if !block.body.is_empty() {
                    return Err(block.body[0].syntax(1, "deformation takes no body lines"));
                }
                let first = ws.map(&maps[0])?;
                for m in &maps[1..] {
                    let other = ws.map(m)?;
                    if other.source != first.source || other.algebra != first.algebra {
                        return Err(InputError::Usage(format!(
                            "deformation `{name}`: `{m}` and `{}` have different endpoints",
                            maps[0]
                        )));
                    }
                }
                ws.deformations.push(NamedDeformation { name, maps });
            }
        }
    }
    Ok(ws)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIXTURE: &str = "\
# Virasoro with its weight-one module
algebra vir
rank 1
bracket 1 1 : d + 2*l

module M over vir
rank 1
action 1 1 : d + l

map T1 : M -> vir
matrix 1
";

    #[test]
    fn parses_fixture() {
        let ws = parse_spec(FIXTURE).unwrap();
        assert_eq!(ws.algebras.len(), 1);
        assert_eq!(ws.modules.len(), 1);
        assert_eq!(ws.maps.len(), 1);
        assert_eq!(ws.algebras[0].algebra.basis, vec!["e".to_string()]);
    }

    #[test]
    fn unresolved_algebra() {
        let err = parse_spec("module M over vir2\nrank 1\n").unwrap_err();
        assert_eq!(err, InputError::UnresolvedReference("vir2".into()));
    }

    #[test]
    fn wrong_vector_length() {
        let err = parse_spec("algebra a\nrank 2\nbracket 1 1 : d\n").unwrap_err();
        assert!(matches!(err, InputError::RankMismatch { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn syntax_error_column() {
        let err = parse_spec("algebra a\nrank 1\nbracket 1 1 : d + * l\n").unwrap_err();
        let InputError::Syntax { line, col, .. } = err else {
            panic!("{err:?}")
        };
        assert_eq!(line, 3);
        assert_eq!(col, 19);
    }

    #[test]
    fn duplicates_rejected() {
        let err = parse_spec("algebra a\nrank 1\nalgebra a\nrank 1\n").unwrap_err();
        assert!(matches!(err, InputError::Duplicate { .. }));
    }

    #[test]
    fn round_trip() {
        let text = format!(
            "{FIXTURE}\ncochain c degree 2 : vir -> M\nvalue 1 1 : l\n\ndeformation S : T1 + T1\n"
        );
        let ws = parse_spec(&text).unwrap();
        let again = parse_spec(&ws.to_text()).unwrap();
        assert_eq!(ws, again);
    }
}
