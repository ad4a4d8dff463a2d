//! Finite groups, loops given by Cayley tables, and the M(G,2) Moufang doubling.
//!
//! Elements are always plain indices `0..order`. Tables are stored row-major, so
//! `product(a, b)` is entry `a * order + b`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("D_n nonabelian requires n >= 3 (got n = {0})")]
    DihedralTooSmall(usize),
    #[error("table is empty")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {order}")]
    RaggedRow { row: usize, len: usize, order: usize },
    #[error("entry ({row},{col}) = {value} is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("Latin-square violation in row {row}: value {value} repeats")]
    RowRepeat { row: usize, value: usize },
    #[error("Latin-square violation in column {col}: value {value} repeats")]
    ColumnRepeat { col: usize, value: usize },
    #[error("identity {identity} is out of range for order {order}")]
    IdentityOutOfRange { identity: usize, order: usize },
    #[error("element {identity} is not a two-sided identity (fails at element {witness})")]
    NotIdentity { identity: usize, witness: usize },
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("table is not associative at ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
}

/// Square multiplication table over `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u32>,
}

impl CayleyTable {
    /// Builds a table from rows, checking shape and entry range only.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, AlgebraError> {
        let order = rows.len();
        if order == 0 {
            return Err(AlgebraError::EmptyTable);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != order {
                return Err(AlgebraError::RaggedRow { row, len: r.len(), order });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(AlgebraError::EntryOutOfRange { row, col, value, order });
                }
                entries.push(value as u32);
            }
        }
        Ok(Self { order, entries })
    }

    fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                entries.push(f(a, b) as u32);
            }
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.order + b] as usize
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.entries[a * self.order..(a + 1) * self.order].iter().map(|&v| v as usize)
    }

    /// Checks every row, then every column, for repeated values.
    pub fn check_latin(&self) -> Result<(), AlgebraError> {
        let n = self.order;
        let mut seen = vec![false; n];
        for row in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for col in 0..n {
                let value = self.get(row, col);
                if core::mem::replace(&mut seen[value], true) {
                    return Err(AlgebraError::RowRepeat { row, value });
                }
            }
        }
        for col in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for row in 0..n {
                let value = self.get(row, col);
                if core::mem::replace(&mut seen[value], true) {
                    return Err(AlgebraError::ColumnRepeat { col, value });
                }
            }
        }
        Ok(())
    }

    fn check_identity(&self, identity: usize) -> Result<(), AlgebraError> {
        if identity >= self.order {
            return Err(AlgebraError::IdentityOutOfRange { identity, order: self.order });
        }
        for x in 0..self.order {
            if self.get(identity, x) != x || self.get(x, identity) != x {
                return Err(AlgebraError::NotIdentity { identity, witness: x });
            }
        }
        Ok(())
    }

    fn first_nonassociative(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.get(xy, z) != self.get(x, self.get(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}

/// A finite group with element display names and a precomputed inverse table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    table: CayleyTable,
    identity: usize,
    names: Vec<String>,
    inverses: Vec<u32>,
}

impl Group {
    /// Validates a group table: Latin square, two-sided identity, associativity.
    pub fn new(table: CayleyTable, identity: usize, names: Vec<String>) -> Result<Self, AlgebraError> {
        table.check_latin()?;
        table.check_identity(identity)?;
        if let Some((x, y, z)) = table.first_nonassociative() {
            return Err(AlgebraError::NotAssociative(x, y, z));
        }
        // Inverse by table lookup; Latin rows guarantee exactly one hit.
        let inverses = (0..table.order()).map(|g| table.row(g).position(|h| h == identity).unwrap() as u32).collect();
        Ok(Self { table, identity, names, inverses })
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g] as usize
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.product(a, b) == self.product(b, a)
    }

    /// Center by exhaustive commutation test.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order()).filter(|&g| (0..self.order()).all(|h| self.commute(g, h))).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order()
    }

    /// The group viewed as a loop.
    pub fn to_loop(&self) -> Loop {
        Loop {
            table: self.table.clone(),
            identity: self.identity,
            names: self.names.clone(),
            provenance: LoopProvenance::UserTable,
        }
    }
}

/// Z(D_n), the non-central rotations R, and the reflections S.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPartition {
    pub center: Vec<usize>,
    pub rotations: Vec<usize>,
    pub reflections: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ElementClass {
    Center,
    Rotation,
    Reflection,
}

impl GroupPartition {
    pub fn class_of(&self, g: usize) -> Option<ElementClass> {
        if self.center.contains(&g) {
            Some(ElementClass::Center)
        } else if self.rotations.contains(&g) {
            Some(ElementClass::Rotation)
        } else if self.reflections.contains(&g) {
            Some(ElementClass::Reflection)
        } else {
            None
        }
    }

    pub fn members(&self, class: ElementClass) -> &[usize] {
        match class {
            ElementClass::Center => &self.center,
            ElementClass::Rotation => &self.rotations,
            ElementClass::Reflection => &self.reflections,
        }
    }
}

fn rotation_name(i: usize) -> String {
    match i {
        0 => String::from("e"),
        1 => String::from("x"),
        _ => format!("x^{i}"),
    }
}

fn reflection_name(i: usize) -> String {
    match i {
        0 => String::from("y"),
        1 => String::from("xy"),
        _ => format!("x^{i}y"),
    }
}

/// The dihedral group of order 2n, elements ordered x^0..x^{n-1}, y, xy, .., x^{n-1}y.
///
/// x^i y^s is index `i + s*n`; the product uses y x^j = x^{-j} y. The center is found
/// by brute force and R/S are split off the rotation and reflection blocks.
pub fn dihedral_group(n: usize) -> Result<(Group, GroupPartition), AlgebraError> {
    if n < 3 {
        return Err(AlgebraError::DihedralTooSmall(n));
    }
    let table = CayleyTable::from_fn(2 * n, |a, b| {
        let (i, s) = (a % n, a / n);
        let (j, t) = (b % n, b / n);
        let k = if s == 0 { (i + j) % n } else { (i + n - j) % n };
        k + ((s + t) % 2) * n
    });
    let names = (0..n).map(rotation_name).chain((0..n).map(reflection_name)).collect();
    let group = Group::new(table, 0, names)?;
    let center = group.center();
    let rotations = (0..n).filter(|g| !center.contains(g)).collect();
    let reflections = (n..2 * n).filter(|g| !center.contains(g)).collect();
    let partition = GroupPartition { center, rotations, reflections };
    Ok((group, partition))
}

/// Where a loop's table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LoopProvenance {
    /// M(G,2) over a base group of the given order.
    MoufangExtension {
        base_order: usize,
    },
    BuiltinOrder5,
    UserTable,
}

/// A loop: Latin-square Cayley table with a two-sided identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    table: CayleyTable,
    identity: usize,
    names: Vec<String>,
    provenance: LoopProvenance,
}

/// An element (g, alpha) of M(G,2); canonical index is `alpha * |G| + g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MoufangElement {
    pub g: usize,
    pub alpha: u8,
}

impl MoufangElement {
    pub fn index(self, base_order: usize) -> usize {
        self.alpha as usize * base_order + self.g
    }

    pub fn from_index(index: usize, base_order: usize) -> Self {
        Self { g: index % base_order, alpha: (index / base_order) as u8 }
    }
}

/// Validates a user-supplied table as a loop.
pub fn validate_loop<R: AsRef<[usize]>>(rows: &[R], identity: usize) -> Result<Loop, AlgebraError> {
    let table = CayleyTable::from_rows(rows)?;
    Loop::from_table(table, identity, LoopProvenance::UserTable)
}

/// The order-5 loop with identity 0 used as the running associativity example.
pub fn builtin_order5_loop() -> Loop {
    const ROWS: [[usize; 5]; 5] = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
    let table = CayleyTable::from_rows(&ROWS).expect("fixture shape");
    Loop::from_table(table, 0, LoopProvenance::BuiltinOrder5).expect("fixture is a loop")
}

/// M(G,2) with (g1,a1)*(g2,a2) = (g1^{1-a2} g2^{(-1)^a1} g1^{a2}, a1+a2 mod 2).
pub fn moufang_extension(group: &Group) -> Loop {
    let m = group.order();
    let table = CayleyTable::from_fn(2 * m, |p, q| {
        let a = MoufangElement::from_index(p, m);
        let b = MoufangElement::from_index(q, m);
        let h = if a.alpha == 0 { b.g } else { group.inverse(b.g) };
        let g = if b.alpha == 0 { group.product(a.g, h) } else { group.product(h, a.g) };
        MoufangElement { g, alpha: (a.alpha + b.alpha) % 2 }.index(m)
    });
    let names = (0..2 * m)
        .map(|i| {
            let e = MoufangElement::from_index(i, m);
            format!("({},{})", group.name(e.g), e.alpha)
        })
        .collect();
    Loop {
        table,
        identity: MoufangElement { g: group.identity(), alpha: 0 }.index(m),
        names,
        provenance: LoopProvenance::MoufangExtension { base_order: m },
    }
}

/// One of the three Moufang identities failing at (x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MoufangViolation {
    /// 1: (xy)(zx) = (x(yz))x, 2: x(y(zy)) = ((xy)z)y, 3: x(y(xz)) = ((xy)x)z.
    pub identity: u8,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MoufangCheck {
    pub counterexample: Option<MoufangViolation>,
}

impl MoufangCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for MoufangViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "identity {} fails at ({},{},{})", self.identity, self.x, self.y, self.z)
    }
}

impl Loop {
    fn from_table(table: CayleyTable, identity: usize, provenance: LoopProvenance) -> Result<Self, AlgebraError> {
        table.check_latin()?;
        table.check_identity(identity)?;
        let names = (0..table.order()).map(|i| format!("{i}")).collect();
        Ok(Self { table, identity, names, provenance })
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn provenance(&self) -> LoopProvenance {
        self.provenance
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    /// (x*y)*z == x*(y*z), without range checks.
    #[inline]
    pub(crate) fn associates_unchecked(&self, x: usize, y: usize, z: usize) -> bool {
        self.product(self.product(x, y), z) == self.product(x, self.product(y, z))
    }

    pub fn associates(&self, x: usize, y: usize, z: usize) -> Result<bool, AlgebraError> {
        let order = self.order();
        if let Some(&index) = [x, y, z].iter().find(|&&i| i >= order) {
            return Err(AlgebraError::IndexOutOfRange { index, order });
        }
        Ok(self.associates_unchecked(x, y, z))
    }

    /// Lexicographically first (x, y, z) with (xy)z != x(yz).
    pub fn nonassociative_witness(&self) -> Option<(usize, usize, usize)> {
        self.table.first_nonassociative()
    }

    pub fn is_associative(&self) -> bool {
        self.nonassociative_witness().is_none()
    }

    /// Exhaustive scan of all |L|^3 triples against the three Moufang identities.
    pub fn check_moufang_identities(&self) -> MoufangCheck {
        let n = self.order();
        let p = |a, b| self.product(a, b);
        for x in 0..n {
            for y in 0..n {
                let xy = p(x, y);
                for z in 0..n {
                    let checks = [
                        p(xy, p(z, x)) == p(p(x, p(y, z)), x),
                        p(x, p(y, p(z, y))) == p(p(xy, z), y),
                        p(x, p(y, p(x, z))) == p(p(xy, x), z),
                    ];
                    if let Some(i) = checks.iter().position(|ok| !ok) {
                        let identity = i as u8 + 1;
                        return MoufangCheck { counterexample: Some(MoufangViolation { identity, x, y, z }) };
                    }
                }
            }
        }
        MoufangCheck { counterexample: None }
    }
}
