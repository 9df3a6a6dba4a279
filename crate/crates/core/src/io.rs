//! Plain-text algebra and inductive-system documents.
//!
//! An algebra document is line oriented. `#` starts a comment line and blank
//! lines are ignored:
//!
//! ```text
//! format reticulation-algebra 1
//! kind residuated-lattice        # or bounded-lattice
//! name kowalski6
//! size 6
//! names 0 a b c d 1              # optional, defaults to indices
//! bot 0
//! top 5
//! table join                     # followed by `size` rows of `size` indices
//! ...
//! table meet
//! table mul                      # residuated lattices only
//! table imp                      # residuated lattices only
//! ```
//!
//! [`AlgebraDocument::to_text`] writes the canonical form: header lines in the
//! order above, no comments, entries right-aligned to the width of `size - 1`.
//!
//! A system document names the algebras of an inductive system and the maps
//! between them. Paths are relative to the system file; `builtin:<name>`
//! refers to a fixture.
//!
//! ```text
//! format reticulation-system 1
//! algebra i  builtin:kowalski6
//! algebra j  quotient.alg
//! map i j 0 1 2 3 3 1            # image of every element of `i`, in order
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::algebra::{
    validate_bdl, validate_rl, Elem, FiniteAlgebra, FiniteBoundedLattice,
    FiniteResiduatedLattice, Kind, LatticeTables, Op, RlTables,
};
use crate::error::{Error, Result};

pub const ALGEBRA_FORMAT: &str = "reticulation-algebra";
pub const SYSTEM_FORMAT: &str = "reticulation-system";
pub const FORMAT_VERSION: u32 = 1;

/// A parsed but not yet validated algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub kind: Kind,
    pub name: String,
    pub names: Vec<String>,
    pub bot: Elem,
    pub top: Elem,
    pub join: Vec<Vec<Elem>>,
    pub meet: Vec<Vec<Elem>>,
    /// Present for residuated lattices only.
    pub mul: Option<Vec<Vec<Elem>>>,
    pub imp: Option<Vec<Vec<Elem>>>,
}

/// Either structure kind, after validation.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    Residuated(FiniteResiduatedLattice),
    Lattice(FiniteBoundedLattice),
}

impl AlgebraDocument {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn from_algebra<A: FiniteAlgebra>(name: &str, a: &A) -> Self {
        let s = a.structure();
        let rows = |op: Op| -> Vec<Vec<Elem>> {
            (0..a.size())
                .map(|x| (0..a.size()).map(|y| a.apply(op, x, y)).collect())
                .collect()
        };
        let residuated = A::KIND == Kind::ResiduatedLattice;
        AlgebraDocument {
            kind: A::KIND,
            name: name.to_string(),
            names: s.names().to_vec(),
            bot: s.bot(),
            top: s.top(),
            join: rows(Op::Join),
            meet: rows(Op::Meet),
            mul: residuated.then(|| rows(Op::Mul)),
            imp: residuated.then(|| rows(Op::Imp)),
        }
    }

    pub fn to_residuated(&self) -> Result<FiniteResiduatedLattice> {
        match (&self.kind, &self.mul, &self.imp) {
            (Kind::ResiduatedLattice, Some(mul), Some(imp)) => validate_rl(RlTables {
                names: Some(self.names.clone()),
                join: self.join.clone(),
                meet: self.meet.clone(),
                mul: mul.clone(),
                imp: imp.clone(),
                bot: self.bot,
                top: self.top,
            }),
            _ => Err(Error::Shape(format!(
                "`{}` is a {}, not a residuated lattice",
                self.name, self.kind
            ))),
        }
    }

    pub fn to_lattice(&self) -> Result<FiniteBoundedLattice> {
        validate_bdl(LatticeTables {
            names: Some(self.names.clone()),
            join: self.join.clone(),
            meet: self.meet.clone(),
            bot: self.bot,
            top: self.top,
        })
    }

    pub fn validate(&self) -> Result<AnyAlgebra> {
        match self.kind {
            Kind::ResiduatedLattice => self.to_residuated().map(AnyAlgebra::Residuated),
            Kind::BoundedLattice => self.to_lattice().map(AnyAlgebra::Lattice),
        }
    }

    /// The canonical text form.
    pub fn to_text(&self) -> String {
        let n = self.size();
        let width = n.saturating_sub(1).to_string().len();
        let mut out = String::new();
        let _ = writeln!(out, "format {ALGEBRA_FORMAT} {FORMAT_VERSION}");
        let _ = writeln!(out, "kind {}", self.kind);
        let _ = writeln!(out, "name {}", self.name);
        let _ = writeln!(out, "size {n}");
        let _ = writeln!(out, "names {}", self.names.join(" "));
        let _ = writeln!(out, "bot {}", self.bot);
        let _ = writeln!(out, "top {}", self.top);
        let mut table = |label: &str, rows: &[Vec<Elem>]| {
            let _ = writeln!(out, "table {label}");
            for row in rows {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
        };
        table("join", &self.join);
        table("meet", &self.meet);
        if let Some(mul) = &self.mul {
            table("mul", mul);
        }
        if let Some(imp) = &self.imp {
            table("imp", imp);
        }
        out
    }
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    /// Whitespace-separated tokens with their 1-based columns.
    fn tokens(&self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self.text.char_indices() {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push((s + 1, &self.text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s + 1, &self.text[s..]));
        }
        out
    }

    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }
}

fn content_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, t)| Line {
            number: i + 1,
            text: t,
        })
        .filter(|l| {
            let t = l.text.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect()
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let last_line = text.lines().count().max(1);
        Cursor {
            lines: content_lines(text),
            pos: 0,
            last_line,
        }
    }

    fn next(&mut self, expecting: &str) -> Result<&Line<'a>> {
        match self.lines.get(self.pos) {
            Some(_) => {
                self.pos += 1;
                Ok(&self.lines[self.pos - 1])
            }
            None => Err(Error::Parse {
                line: self.last_line,
                column: 1,
                message: format!("unexpected end of input, expected {expecting}"),
            }),
        }
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.lines
            .get(self.pos)
            .and_then(|l| l.tokens().first().map(|t| t.1))
    }

    /// A `keyword value...` line; returns the value tokens.
    fn keyword(&mut self, keyword: &str) -> Result<(Vec<(usize, &'a str)>, usize)> {
        let line = self.next(&format!("`{keyword}`"))?;
        let toks = line.tokens();
        if toks[0].1 != keyword {
            return Err(line.err(toks[0].0, format!("expected `{keyword}`, found `{}`", toks[0].1)));
        }
        Ok((toks[1..].to_vec(), line.number))
    }

    fn err_at(&self, line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

fn parse_index(line: usize, (column, tok): (usize, &str)) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line,
        column,
        message: format!("expected a non-negative integer, found `{tok}`"),
    })
}

fn single<'a>(
    c: &Cursor<'a>,
    toks: &[(usize, &'a str)],
    line: usize,
    keyword: &str,
) -> Result<(usize, &'a str)> {
    match toks {
        [t] => Ok(*t),
        [] => Err(c.err_at(line, keyword.len() + 1, format!("`{keyword}` needs a value"))),
        [_, extra, ..] => Err(c.err_at(line, extra.0, format!("unexpected `{}`", extra.1))),
    }
}

fn parse_table(c: &mut Cursor<'_>, label: &str, n: usize) -> Result<Vec<Vec<Elem>>> {
    let (toks, line) = c.keyword("table")?;
    let name = single(c, &toks, line, "table")?;
    if name.1 != label {
        return Err(c.err_at(line, name.0, format!("expected table `{label}`, found `{}`", name.1)));
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let row_line = c.next(&format!("row {r} of table `{label}`"))?;
        let toks = row_line.tokens();
        if toks.len() != n {
            let column = toks.get(n).map_or(row_line.text.len() + 1, |t| t.0);
            return Err(row_line.err(
                column,
                format!("row {r} of table `{label}` has {} entries, expected {n}", toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for t in toks {
            let v = parse_index(row_line.number, t)?;
            if v >= n {
                return Err(row_line.err(t.0, format!("entry {v} is outside 0..{n}")));
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(rows)
}

fn parse_header(c: &mut Cursor<'_>, format: &str) -> Result<()> {
    let (toks, line) = c.keyword("format")?;
    match toks.as_slice() {
        [(_, f), (col, v)] if *f == format => {
            if parse_index(line, (*col, v))? != FORMAT_VERSION as usize {
                return Err(c.err_at(line, *col, format!("unsupported version {v}")));
            }
            Ok(())
        }
        [(col, f), ..] => Err(c.err_at(line, *col, format!("expected format `{format}`, found `{f}`"))),
        [] => Err(c.err_at(line, 1, "`format` needs a name and a version")),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraDocument> {
    let mut c = Cursor::new(text);
    parse_header(&mut c, ALGEBRA_FORMAT)?;

    let (toks, line) = c.keyword("kind")?;
    let kind_tok = single(&c, &toks, line, "kind")?;
    let kind = match kind_tok.1 {
        "residuated-lattice" => Kind::ResiduatedLattice,
        "bounded-lattice" => Kind::BoundedLattice,
        other => return Err(c.err_at(line, kind_tok.0, format!("unknown kind `{other}`"))),
    };

    let (toks, line) = c.keyword("name")?;
    if toks.is_empty() {
        return Err(c.err_at(line, 5, "`name` needs a value"));
    }
    let name = toks.iter().map(|t| t.1).collect::<Vec<_>>().join(" ");

    let (toks, line) = c.keyword("size")?;
    let n = parse_index(line, single(&c, &toks, line, "size")?)?;
    if n == 0 {
        return Err(c.err_at(line, toks[0].0, "size must be at least 1"));
    }

    let names = if c.peek_keyword() == Some("names") {
        let (toks, line) = c.keyword("names")?;
        if toks.len() != n {
            return Err(c.err_at(line, 1, format!("{} names given for {n} elements", toks.len())));
        }
        let names: Vec<String> = toks.iter().map(|t| t.1.to_string()).collect();
        for (i, t) in toks.iter().enumerate() {
            if names[..i].contains(&names[i]) {
                return Err(c.err_at(line, t.0, format!("duplicate name `{}`", t.1)));
            }
        }
        names
    } else {
        (0..n).map(|i| i.to_string()).collect()
    };

    let mut constant = |kw: &str| -> Result<Elem> {
        let (toks, line) = c.keyword(kw)?;
        let tok = single(&c, &toks, line, kw)?;
        let v = parse_index(line, tok)?;
        if v >= n {
            return Err(c.err_at(line, tok.0, format!("{kw} {v} is outside 0..{n}")));
        }
        Ok(v)
    };
    let bot = constant("bot")?;
    let top = constant("top")?;

    let join = parse_table(&mut c, "join", n)?;
    let meet = parse_table(&mut c, "meet", n)?;
    let (mul, imp) = match kind {
        Kind::ResiduatedLattice => (
            Some(parse_table(&mut c, "mul", n)?),
            Some(parse_table(&mut c, "imp", n)?),
        ),
        Kind::BoundedLattice => (None, None),
    };
    if let Some(extra) = c.lines.get(c.pos) {
        let col = extra.tokens()[0].0;
        return Err(extra.err(col, "unexpected content after the last table"));
    }
    Ok(AlgebraDocument {
        kind,
        name,
        names,
        bot,
        top,
        join,
        meet,
        mul,
        imp,
    })
}

pub fn load(path: impl AsRef<Path>) -> Result<AlgebraDocument> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_algebra(&text)
}

pub fn save(doc: &AlgebraDocument, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), doc.to_text())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))
}

/// A parsed system file; algebra sources are still unresolved strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemDocument {
    pub algebras: Vec<(String, String)>,
    pub maps: Vec<(String, String, Vec<Elem>)>,
}

pub fn parse_system(text: &str) -> Result<SystemDocument> {
    let mut c = Cursor::new(text);
    parse_header(&mut c, SYSTEM_FORMAT)?;
    let mut algebras: Vec<(String, String)> = Vec::new();
    let mut maps = Vec::new();
    while let Some(kw) = c.peek_keyword() {
        let line = c.next("a declaration")?;
        let toks = line.tokens();
        match kw {
            "algebra" => {
                if toks.len() != 3 {
                    return Err(line.err(1, "expected `algebra <label> <source>`"));
                }
                if algebras.iter().any(|(l, _)| l == toks[1].1) {
                    return Err(line.err(toks[1].0, format!("duplicate label `{}`", toks[1].1)));
                }
                algebras.push((toks[1].1.to_string(), toks[2].1.to_string()));
            }
            "map" => {
                if toks.len() < 3 {
                    return Err(line.err(1, "expected `map <from> <to> <images...>`"));
                }
                for t in &toks[1..3] {
                    if !algebras.iter().any(|(l, _)| l == t.1) {
                        return Err(line.err(t.0, format!("unknown label `{}`", t.1)));
                    }
                }
                let images = toks[3..]
                    .iter()
                    .map(|&t| parse_index(line.number, t))
                    .collect::<Result<Vec<_>>>()?;
                maps.push((toks[1].1.to_string(), toks[2].1.to_string(), images));
            }
            other => {
                return Err(line.err(toks[0].0, format!("unknown declaration `{other}`")));
            }
        }
    }
    if algebras.is_empty() {
        return Err(Error::Parse {
            line: c.last_line,
            column: 1,
            message: "a system needs at least one algebra".into(),
        });
    }
    Ok(SystemDocument { algebras, maps })
}

impl SystemDocument {
    pub fn to_text(&self) -> String {
        let mut out = format!("format {SYSTEM_FORMAT} {FORMAT_VERSION}\n");
        for (l, s) in &self.algebras {
            let _ = writeln!(out, "algebra {l} {s}");
        }
        for (i, j, m) in &self.maps {
            let imgs: Vec<String> = m.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "map {i} {j} {}", imgs.join(" "));
        }
        out
    }
}
