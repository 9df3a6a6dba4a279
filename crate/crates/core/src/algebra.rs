//! Finite residuated lattices and bounded distributive lattices.
//!
//! Elements are dense indices `0..n`. Every operation is a full `n x n`
//! table and the order is always read off the join table (`a <= b` iff
//! `a v b = b`); no separate order relation is ever stored. Both structure
//! kinds are validated eagerly, so every value of [`FiniteResiduatedLattice`]
//! or [`FiniteBoundedLattice`] satisfies its axioms.

use std::fmt;

use crate::error::{Error, Result};
use crate::par;
use crate::report::Report;

pub type Elem = usize;

/// A binary operation table stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    cells: Vec<Elem>,
}

impl Table {
    pub fn from_fn(n: usize, f: impl Fn(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b));
            }
        }
        Table { n, cells }
    }

    /// Builds a table from rows, checking that it is square with entries in range.
    pub fn from_rows(rows: &[Vec<Elem>], n: usize, what: &str) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::Shape(format!(
                "{what} table has {} rows, expected {n}",
                rows.len()
            )));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "{what} table row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Shape(format!(
                    "{what} table row {i} contains {bad}, outside 0..{n}"
                )));
            }
            cells.extend_from_slice(row);
        }
        Ok(Table { n, cells })
    }

    pub(crate) fn from_cells(n: usize, cells: Vec<Elem>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        Table { n, cells }
    }

    #[inline]
    pub fn get(&self, a: Elem, b: Elem) -> Elem {
        self.cells[a * self.n + b]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.cells.chunks(self.n.max(1)).take(self.n)
    }
}

/// Which of the two categories an algebra or morphism lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    ResiduatedLattice,
    BoundedLattice,
}

impl Kind {
    /// The binary operations a morphism of this kind must preserve, in table order.
    pub fn operations(self) -> &'static [Op] {
        match self {
            Kind::ResiduatedLattice => &[Op::Join, Op::Meet, Op::Mul, Op::Imp],
            Kind::BoundedLattice => &[Op::Join, Op::Meet],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Kind::ResiduatedLattice => "residuated-lattice",
            Kind::BoundedLattice => "bounded-lattice",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Join,
    Meet,
    Mul,
    Imp,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Join => "join",
            Op::Meet => "meet",
            Op::Mul => "mul",
            Op::Imp => "imp",
        }
    }

    pub fn is_commutative(self) -> bool {
        !matches!(self, Op::Imp)
    }

    fn slot(self) -> usize {
        match self {
            Op::Join => 0,
            Op::Meet => 1,
            Op::Mul => 2,
            Op::Imp => 3,
        }
    }
}

/// Carrier, display names, operation tables and constants of a finite algebra.
///
/// Tables are ordered as in [`Kind::operations`]. A `Structure` on its own is
/// unchecked; it becomes an algebra only through [`FiniteAlgebra::from_structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    names: Vec<String>,
    tables: Vec<Table>,
    bot: Elem,
    top: Elem,
}

impl Structure {
    pub fn new(names: Vec<String>, tables: Vec<Table>, bot: Elem, top: Elem) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Shape("carrier must be nonempty".into()));
        }
        if bot >= n || top >= n {
            return Err(Error::Shape(format!(
                "constants bot={bot}, top={top} must lie in 0..{n}"
            )));
        }
        if let Some(t) = tables.iter().find(|t| t.size() != n) {
            return Err(Error::Shape(format!(
                "table of size {} does not match carrier of size {n}",
                t.size()
            )));
        }
        Ok(Structure {
            names,
            tables,
            bot,
            top,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn tables(&self) -> &[Table] {
        &self.tables
    }

    pub fn bot(&self) -> Elem {
        self.bot
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn apply(&self, op: Op, a: Elem, b: Elem) -> Elem {
        self.tables[op.slot()].get(a, b)
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Behaviour shared by both structure kinds.
///
/// `fuse` is the operation filters must be closed under: the monoid product
/// for residuated lattices, the meet for lattices.
pub trait FiniteAlgebra: Clone + fmt::Debug + Send + Sync + Sized {
    const KIND: Kind;

    fn structure(&self) -> &Structure;

    /// Validates a structure as an algebra of this kind.
    fn from_structure(s: Structure) -> Result<Self>;

    /// The operation generating filters and powers.
    fn fuse(&self, a: Elem, b: Elem) -> Elem;

    fn size(&self) -> usize {
        self.structure().size()
    }

    fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    #[inline]
    fn join(&self, a: Elem, b: Elem) -> Elem {
        self.structure().apply(Op::Join, a, b)
    }

    #[inline]
    fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.structure().apply(Op::Meet, a, b)
    }

    #[inline]
    fn apply(&self, op: Op, a: Elem, b: Elem) -> Elem {
        self.structure().apply(op, a, b)
    }

    fn bot(&self) -> Elem {
        self.structure().bot()
    }

    fn top(&self) -> Elem {
        self.structure().top()
    }

    #[inline]
    fn leq(&self, a: Elem, b: Elem) -> bool {
        self.join(a, b) == b
    }

    fn names(&self) -> &[String] {
        self.structure().names()
    }

    fn name(&self, a: Elem) -> &str {
        &self.structure().names()[a]
    }

    /// Resolves a display name, falling back to a decimal index.
    fn element(&self, label: &str) -> Result<Elem> {
        if let Some(i) = self.names().iter().position(|s| s == label) {
            return Ok(i);
        }
        match label.parse::<usize>() {
            Ok(i) if i < self.size() => Ok(i),
            _ => Err(Error::UnknownElement(label.to_string())),
        }
    }

    /// Formats a set of elements as `{x,y,z}` using display names.
    fn format_set(&self, elems: impl IntoIterator<Item = Elem>) -> String {
        let parts: Vec<&str> = elems.into_iter().map(|e| self.name(e)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Covering pairs `(lower, upper)` of the order, sorted.
    fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.leq(a, b)
                    && !(0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The stable power `a^k` (with `a^(k+1) = a^k`) and the least such `k >= 1`.
    fn stable_power(&self, a: Elem) -> (Elem, usize) {
        let mut p = a;
        let mut k = 1;
        loop {
            let next = self.fuse(p, a);
            if next == p {
                return (p, k);
            }
            p = next;
            k += 1;
        }
    }

    /// `a^n` for `n >= 1`.
    fn power(&self, a: Elem, n: usize) -> Elem {
        assert!(n >= 1, "powers start at 1");
        let mut p = a;
        for _ in 1..n {
            p = self.fuse(p, a);
        }
        p
    }
}

/// Raw operation tables of a residuated lattice, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RlTables {
    pub names: Option<Vec<String>>,
    pub join: Vec<Vec<Elem>>,
    pub meet: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Elem>>,
    pub imp: Vec<Vec<Elem>>,
    pub bot: Elem,
    pub top: Elem,
}

/// Raw operation tables of a bounded lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTables {
    pub names: Option<Vec<String>>,
    pub join: Vec<Vec<Elem>>,
    pub meet: Vec<Vec<Elem>>,
    pub bot: Elem,
    pub top: Elem,
}

fn carrier_names(names: Option<Vec<String>>, n: usize) -> Result<Vec<String>> {
    match names {
        None => Ok(default_names(n)),
        Some(v) if v.len() == n => Ok(v),
        Some(v) => Err(Error::Shape(format!(
            "{} names given for {n} elements",
            v.len()
        ))),
    }
}

/// A validated finite (commutative, integral, bounded) residuated lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteResiduatedLattice {
    s: Structure,
}

/// A validated finite bounded distributive lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBoundedLattice {
    s: Structure,
}

pub fn validate_rl(t: RlTables) -> Result<FiniteResiduatedLattice> {
    let n = t.join.len();
    let names = carrier_names(t.names, n)?;
    let tables = vec![
        Table::from_rows(&t.join, n, "join")?,
        Table::from_rows(&t.meet, n, "meet")?,
        Table::from_rows(&t.mul, n, "mul")?,
        Table::from_rows(&t.imp, n, "imp")?,
    ];
    FiniteResiduatedLattice::from_structure(Structure::new(names, tables, t.bot, t.top)?)
}

pub fn validate_bdl(t: LatticeTables) -> Result<FiniteBoundedLattice> {
    let n = t.join.len();
    let names = carrier_names(t.names, n)?;
    let tables = vec![
        Table::from_rows(&t.join, n, "join")?,
        Table::from_rows(&t.meet, n, "meet")?,
    ];
    FiniteBoundedLattice::from_structure(Structure::new(names, tables, t.bot, t.top)?)
}

fn first_pair(n: usize, f: impl Fn(Elem, Elem) -> bool + Sync + Send) -> Option<Vec<Elem>> {
    par::find_first(n, |a| (0..n).find(|&b| f(a, b)).map(|b| vec![a, b]))
}

fn first_triple(n: usize, f: impl Fn(Elem, Elem, Elem) -> bool + Sync + Send) -> Option<[Elem; 3]> {
    par::find_first(n, |a| {
        for b in 0..n {
            for c in 0..n {
                if f(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    })
}

fn check_lattice_laws(s: &Structure) -> Result<()> {
    let n = s.size();
    let j = |a, b| s.apply(Op::Join, a, b);
    let m = |a, b| s.apply(Op::Meet, a, b);
    let fail = |law, witness| Err(Error::LatticeLawViolation { law, witness });

    if let Some(w) = first_pair(n, |a, b| j(a, b) != j(b, a)) {
        return fail("join commutativity", w);
    }
    if let Some(w) = first_pair(n, |a, b| m(a, b) != m(b, a)) {
        return fail("meet commutativity", w);
    }
    if let Some(a) = (0..n).find(|&a| j(a, a) != a) {
        return fail("join idempotence", vec![a]);
    }
    if let Some(a) = (0..n).find(|&a| m(a, a) != a) {
        return fail("meet idempotence", vec![a]);
    }
    if let Some(w) = first_triple(n, |a, b, c| j(j(a, b), c) != j(a, j(b, c))) {
        return fail("join associativity", w.to_vec());
    }
    if let Some(w) = first_triple(n, |a, b, c| m(m(a, b), c) != m(a, m(b, c))) {
        return fail("meet associativity", w.to_vec());
    }
    if let Some(w) = first_pair(n, |a, b| j(a, m(a, b)) != a || m(a, j(a, b)) != a) {
        return fail("absorption", w);
    }
    if let Some(a) = (0..n).find(|&a| j(s.bot(), a) != a) {
        return fail("bottom is the join identity", vec![s.bot(), a]);
    }
    if let Some(a) = (0..n).find(|&a| m(s.top(), a) != a) {
        return fail("top is the meet identity", vec![s.top(), a]);
    }
    Ok(())
}

// Checked before the monoid laws.
fn check_residuation(s: &Structure) -> Result<()> {
    let n = s.size();
    let leq = |a, b| s.apply(Op::Join, a, b) == b;
    let w = first_triple(n, |a, b, c| {
        leq(a, s.apply(Op::Imp, b, c)) != leq(s.apply(Op::Mul, a, b), c)
    });
    match w {
        Some([a, b, c]) => Err(Error::ResiduationViolation { a, b, c }),
        None => Ok(()),
    }
}

fn check_monoid(s: &Structure) -> Result<()> {
    let n = s.size();
    let p = |a, b| s.apply(Op::Mul, a, b);
    let fail = |law, witness| Err(Error::MonoidLawViolation { law, witness });
    if let Some(w) = first_pair(n, |a, b| p(a, b) != p(b, a)) {
        return fail("commutativity", w);
    }
    if let Some(w) = first_triple(n, |a, b, c| p(p(a, b), c) != p(a, p(b, c))) {
        return fail("associativity", w.to_vec());
    }
    if let Some(a) = (0..n).find(|&a| p(s.top(), a) != a) {
        return fail("top is the unit", vec![s.top(), a]);
    }
    Ok(())
}

fn check_distributivity(s: &Structure) -> Result<()> {
    let j = |a, b| s.apply(Op::Join, a, b);
    let m = |a, b| s.apply(Op::Meet, a, b);
    match first_triple(s.size(), |a, b, c| m(a, j(b, c)) != j(m(a, b), m(a, c))) {
        Some([a, b, c]) => Err(Error::DistributivityViolation { a, b, c }),
        None => Ok(()),
    }
}

impl FiniteAlgebra for FiniteResiduatedLattice {
    const KIND: Kind = Kind::ResiduatedLattice;

    fn structure(&self) -> &Structure {
        &self.s
    }

    fn from_structure(s: Structure) -> Result<Self> {
        if s.tables().len() != 4 {
            return Err(Error::Shape(format!(
                "a residuated lattice needs 4 tables, got {}",
                s.tables().len()
            )));
        }
        check_lattice_laws(&s)?;
        check_residuation(&s)?;
        check_monoid(&s)?;
        Ok(FiniteResiduatedLattice { s })
    }

    #[inline]
    fn fuse(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, b)
    }
}

impl FiniteAlgebra for FiniteBoundedLattice {
    const KIND: Kind = Kind::BoundedLattice;

    fn structure(&self) -> &Structure {
        &self.s
    }

    fn from_structure(s: Structure) -> Result<Self> {
        if s.tables().len() != 2 {
            return Err(Error::Shape(format!(
                "a bounded lattice needs 2 tables, got {}",
                s.tables().len()
            )));
        }
        check_lattice_laws(&s)?;
        check_distributivity(&s)?;
        Ok(FiniteBoundedLattice { s })
    }

    #[inline]
    fn fuse(&self, a: Elem, b: Elem) -> Elem {
        self.meet(a, b)
    }
}

impl FiniteResiduatedLattice {
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.s.apply(Op::Mul, a, b)
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.s.apply(Op::Imp, a, b)
    }

    /// `(a -> b) ^ (b -> a)`
    pub fn biimp(&self, a: Elem, b: Elem) -> Elem {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    /// `a -> 0`
    pub fn negate(&self, a: Elem) -> Elem {
        self.imp(a, self.bot())
    }

    /// The Goedel chain of the given length: product is meet, and
    /// `a -> b` is top when `a <= b` and `b` otherwise.
    pub fn godel_chain(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::Shape("a chain needs at least one element".into()));
        }
        let top = len - 1;
        let names = (0..len)
            .map(|i| match i {
                0 => "0".to_string(),
                i if i == top => "1".to_string(),
                i => format!("c{i}"),
            })
            .collect();
        let tables = vec![
            Table::from_fn(len, |a, b| a.max(b)),
            Table::from_fn(len, |a, b| a.min(b)),
            Table::from_fn(len, |a, b| a.min(b)),
            Table::from_fn(len, |a, b| if a <= b { top } else { b }),
        ];
        Self::from_structure(Structure::new(names, tables, 0, top)?)
    }

    pub fn to_tables(&self) -> RlTables {
        let rows = |op: Op| -> Vec<Vec<Elem>> {
            self.s.tables[op.slot()].rows().map(|r| r.to_vec()).collect()
        };
        RlTables {
            names: Some(self.s.names.clone()),
            join: rows(Op::Join),
            meet: rows(Op::Meet),
            mul: rows(Op::Mul),
            imp: rows(Op::Imp),
            bot: self.s.bot,
            top: self.s.top,
        }
    }

    /// The underlying bounded lattice, if it is distributive.
    pub fn lattice_reduct(&self) -> Result<FiniteBoundedLattice> {
        let s = Structure::new(
            self.s.names.clone(),
            self.s.tables[..2].to_vec(),
            self.s.bot,
            self.s.top,
        )?;
        FiniteBoundedLattice::from_structure(s)
    }
}

impl FiniteBoundedLattice {
    /// The chain `0 < 1 < ... < len-1`.
    pub fn chain(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::Shape("a chain needs at least one element".into()));
        }
        let tables = vec![
            Table::from_fn(len, |a, b| a.max(b)),
            Table::from_fn(len, |a, b| a.min(b)),
        ];
        Self::from_structure(Structure::new(default_names(len), tables, 0, len - 1)?)
    }

    /// The Boolean algebra of subsets of `atoms` atoms; element `i` is the bitmask `i`.
    pub fn boolean(atoms: usize) -> Result<Self> {
        if atoms > 16 {
            return Err(Error::SizeLimitExceeded {
                what: "Boolean algebra atoms",
                size: atoms,
                limit: 16,
            });
        }
        let n = 1usize << atoms;
        let names = (0..n)
            .map(|m| match m {
                0 => "0".to_string(),
                m if m == n - 1 => "1".to_string(),
                m => {
                    let bits: Vec<String> = (0..atoms)
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| format!("x{i}"))
                        .collect();
                    bits.join("+")
                }
            })
            .collect();
        let tables = vec![
            Table::from_fn(n, |a, b| a | b),
            Table::from_fn(n, |a, b| a & b),
        ];
        Self::from_structure(Structure::new(names, tables, 0, n - 1)?)
    }

    /// The lattice with elements relabelled: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[Elem]) -> Result<Self> {
        let s = permute_structure(&self.s, perm)?;
        Self::from_structure(s)
    }
}

pub(crate) fn permute_structure(s: &Structure, perm: &[Elem]) -> Result<Structure> {
    let n = s.size();
    let mut inv = vec![usize::MAX; n];
    if perm.len() != n {
        return Err(Error::Shape("permutation has the wrong length".into()));
    }
    for (i, &p) in perm.iter().enumerate() {
        if p >= n || inv[p] != usize::MAX {
            return Err(Error::Shape("not a permutation".into()));
        }
        inv[p] = i;
    }
    let names = (0..n).map(|p| s.names[inv[p]].clone()).collect();
    let tables = s
        .tables
        .iter()
        .map(|t| Table::from_fn(n, |a, b| perm[t.get(inv[a], inv[b])]))
        .collect();
    Structure::new(names, tables, perm[s.bot], perm[s.top])
}

/// The complemented elements of an algebra with their complements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanCenter {
    elements: Vec<Elem>,
    complement: Vec<Option<Elem>>,
}

impl BooleanCenter {
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.complement.get(e).is_some_and(|c| c.is_some())
    }

    pub fn complement(&self, e: Elem) -> Option<Elem> {
        self.complement.get(e).copied().flatten()
    }

    /// The center as a lattice in its own right, indexed by position in
    /// [`elements`](Self::elements).
    pub fn as_lattice<A: FiniteAlgebra>(&self, host: &A) -> Result<FiniteBoundedLattice> {
        let k = self.elements.len();
        let pos = |e: Elem| self.elements.iter().position(|&x| x == e);
        let lift = |op: Op| -> Result<Table> {
            let mut cells = Vec::with_capacity(k * k);
            for &a in &self.elements {
                for &b in &self.elements {
                    let r = host.apply(op, a, b);
                    cells.push(pos(r).ok_or(Error::NotClosed {
                        op: op.name(),
                        a,
                        b,
                        result: r,
                    })?);
                }
            }
            Ok(Table::from_cells(k, cells))
        };
        let names = self
            .elements
            .iter()
            .map(|&e| host.name(e).to_string())
            .collect();
        let s = Structure::new(
            names,
            vec![lift(Op::Join)?, lift(Op::Meet)?],
            pos(host.bot()).expect("bot is complemented"),
            pos(host.top()).expect("top is complemented"),
        )?;
        FiniteBoundedLattice::from_structure(s)
    }
}

pub fn boolean_center<A: FiniteAlgebra>(host: &A) -> BooleanCenter {
    let complement: Vec<Option<Elem>> = par::map(host.size(), |e| {
        host.elements()
            .find(|&f| host.join(e, f) == host.top() && host.meet(e, f) == host.bot())
    });
    let elements = (0..host.size()).filter(|&e| complement[e].is_some()).collect();
    BooleanCenter {
        elements,
        complement,
    }
}

/// Whether every element is complemented.
pub fn is_boolean<A: FiniteAlgebra>(host: &A) -> bool {
    boolean_center(host).len() == host.size()
}

/// The largest `m` with `l ^ m = 0`, when one exists.
pub fn pseudocomplement<A: FiniteAlgebra>(host: &A, l: Elem) -> Option<Elem> {
    let disjoint: Vec<Elem> = host
        .elements()
        .filter(|&m| host.meet(l, m) == host.bot())
        .collect();
    disjoint
        .iter()
        .copied()
        .find(|&m| disjoint.iter().all(|&x| host.leq(x, m)))
}

pub fn is_pseudocomplemented<A: FiniteAlgebra>(host: &A) -> bool {
    host.elements().all(|l| pseudocomplement(host, l).is_some())
}

/// Exhaustively checks the four elementary arithmetic rules of residuated
/// lattices: product distributes over join, `a v b = 1` forces `a*b = a^b`,
/// product is monotone, and `a <= b` iff `a -> b = 1`.
pub fn check_arithmetic(a: &FiniteResiduatedLattice) -> Report {
    let n = a.size();
    let top = a.top();
    let mut r = Report::new("arithmetic rules");

    let w = first_triple(n, |x, y, z| {
        a.mul(x, a.join(y, z)) != a.join(a.mul(x, y), a.mul(x, z))
    });
    r.check(
        "product distributes over join",
        w.map(|[x, y, z]| format!("a={x}, b={y}, c={z}")),
    );

    let w = first_pair(n, |x, y| a.join(x, y) == top && a.mul(x, y) != a.meet(x, y));
    r.check(
        "a v b = 1 implies a*b = a^b",
        w.map(|v| format!("a={}, b={}", v[0], v[1])),
    );

    let w = par::find_first(n, |x| {
        for y in 0..n {
            if !a.leq(x, y) {
                continue;
            }
            for z in 0..n {
                for t in 0..n {
                    if a.leq(z, t) && !a.leq(a.mul(x, z), a.mul(y, t)) {
                        return Some((x, y, z, t));
                    }
                }
            }
        }
        None
    });
    r.check(
        "product is monotone",
        w.map(|(x, y, z, t)| format!("a={x}, b={y}, c={z}, d={t}")),
    );

    let w = first_pair(n, |x, y| a.leq(x, y) != (a.imp(x, y) == top));
    r.check(
        "a <= b iff a -> b = 1",
        w.map(|v| format!("a={}, b={}", v[0], v[1])),
    );
    r
}
