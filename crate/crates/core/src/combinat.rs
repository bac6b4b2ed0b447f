//! Partitions, multipartitions, box coordinates and degree data.
//!
//! A box has coordinates `(x, y)`: `y` is the row index and `x` the position
//! inside the row, both 0-based, so `(x, y)` lies in the shape iff
//! `y < len` and `x < parts[y]`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("box ({x},{y}) of component {comp} is outside the shape")]
    BoxOutsideShape { comp: usize, x: u32, y: u32 },
    #[error("degree data does not match the shape")]
    ShapeMismatch,
}

/// Young diagram as a weakly decreasing list of positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        (y as usize) < self.0.len() && x < self.0[y as usize]
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len).map(move |x| (x, y as u32)))
    }

    /// Number of boxes to the right of `(x, y)` in its row.
    pub fn arm(&self, x: u32, y: u32) -> i32 {
        self.0[y as usize] as i32 - x as i32 - 1
    }

    /// Number of boxes below `(x, y)` in its column.
    pub fn leg(&self, x: u32, y: u32) -> i32 {
        self.0.iter().filter(|&&l| l > x).count() as i32 - y as i32 - 1
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((0..w).map(|x| self.0.iter().filter(|&&l| l > x).count() as u32).collect())
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, o: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.0.len().max(o.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += o.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicity of each part value, as `(part, count)`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Insert one part, keeping the order.
    pub fn with_part(&self, k: u32) -> Partition {
        let mut v = self.0.clone();
        let pos = v.iter().position(|&p| p < k).unwrap_or(v.len());
        v.insert(pos, k);
        Partition(v)
    }

    /// Remove one occurrence of part `k`, if present.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == k)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Tiny cursor over a literal, shared by the partition and multipartition parsers.
struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> CombinatError {
        CombinatError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), CombinatError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u32, CombinatError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a digit"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| CombinatError::Syntax {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn partition(&mut self) -> Result<Partition, CombinatError> {
        self.expect(b'[')?;
        let mut parts = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(Partition::empty());
        }
        loop {
            parts.push(self.number()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
        Partition::new(parts)
    }

    fn finish(&mut self) -> Result<(), CombinatError> {
        if self.peek().is_some() {
            Err(self.err("trailing input"))
        } else {
            Ok(())
        }
    }
}

/// Parse a partition at the start of `s`, returning it and the bytes consumed.
pub fn parse_partition_prefix(s: &str) -> Result<(Partition, usize), CombinatError> {
    let mut c = Cursor::new(s);
    let p = c.partition()?;
    Ok((p, c.pos))
}

impl FromStr for Partition {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        let p = c.partition()?;
        c.finish()?;
        Ok(p)
    }
}

/// All partitions of `n`, largest first in reverse lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A box of a multipartition; `comp` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub comp: usize,
    pub x: u32,
    pub y: u32,
}

/// An r-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition(components)
    }

    pub fn single(p: Partition) -> Self {
        MultiPartition(vec![p])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// Boxes component by component, row-major inside each.
    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| p.boxes().map(move |(x, y)| Cell { comp, x, y }))
            .collect()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        c.comp < self.0.len() && self.0[c.comp].contains(c.x, c.y)
    }

    /// Concatenate the components of two tuples.
    pub fn join(&self, o: &MultiPartition) -> MultiPartition {
        let mut v = self.0.clone();
        v.extend(o.0.iter().cloned());
        MultiPartition(v)
    }

    /// Split after the first `r1` components.
    pub fn split(&self, r1: usize) -> (MultiPartition, MultiPartition) {
        (
            MultiPartition(self.0[..r1].to_vec()),
            MultiPartition(self.0[r1..].to_vec()),
        )
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for MultiPartition {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        c.expect(b'[')?;
        let mut comps = Vec::new();
        if c.peek() == Some(b']') {
            c.pos += 1;
        } else {
            loop {
                comps.push(c.partition()?);
                match c.peek() {
                    Some(b',') => c.pos += 1,
                    Some(b']') => {
                        c.pos += 1;
                        break;
                    }
                    _ => return Err(c.err("expected ',' or ']'")),
                }
            }
        }
        c.finish()?;
        Ok(MultiPartition(comps))
    }
}

/// All r-tuples of partitions with total size `n`. The first component is
/// filled first.
pub fn enumerate_multipartitions(n: u32, r: usize) -> Vec<MultiPartition> {
    assert!(r >= 1, "rank must be positive");
    if r == 1 {
        return enumerate_partitions(n)
            .into_iter()
            .map(MultiPartition::single)
            .collect();
    }
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for head in enumerate_partitions(k) {
            for tail in enumerate_multipartitions(n - k, r - 1) {
                let mut v = vec![head.clone()];
                v.extend(tail.0);
                out.push(MultiPartition(v));
            }
        }
    }
    out
}

/// Direction of the monotonicity condition on degree data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum Monotonicity {
    /// `d(x,y) <= d(x+1,y)` and `d(x,y) <= d(x,y+1)`: reverse plane partitions.
    #[default]
    Increasing,
    /// `d(x,y) >= d(x+1,y)` and `d(x,y) >= d(x,y+1)`: plane partitions.
    Decreasing,
}


impl Monotonicity {
    fn ok(self, inner: u32, outer: u32) -> bool {
        match self {
            Monotonicity::Increasing => inner <= outer,
            Monotonicity::Decreasing => inner >= outer,
        }
    }

    /// Whether every component filling is monotone in this direction.
    pub fn admits(self, d: &DegreeData) -> bool {
        d.values.iter().all(|rows| {
            rows.iter().enumerate().all(|(y, row)| {
                row.iter().enumerate().all(|(x, &v)| {
                    let right = row.get(x + 1).is_none_or(|&w| self.ok(v, w));
                    let below = rows
                        .get(y + 1)
                        .and_then(|r| r.get(x))
                        .is_none_or(|&w| self.ok(v, w));
                    right && below
                })
            })
        })
    }
}

/// Non-negative integers on the boxes of a multipartition, stored row-major
/// per component.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeData {
    shape: MultiPartition,
    values: Vec<Vec<Vec<u32>>>,
}

impl DegreeData {
    pub fn zero(shape: &MultiPartition) -> Self {
        let values = shape
            .components()
            .iter()
            .map(|p| p.parts().iter().map(|&l| vec![0; l as usize]).collect())
            .collect();
        DegreeData {
            shape: shape.clone(),
            values,
        }
    }

    pub fn from_values(
        shape: &MultiPartition,
        values: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self, CombinatError> {
        let fits = values.len() == shape.rank()
            && values.iter().zip(shape.components()).all(|(rows, p)| {
                rows.len() == p.len()
                    && rows.iter().zip(p.parts()).all(|(r, &l)| r.len() == l as usize)
            });
        if !fits {
            return Err(CombinatError::ShapeMismatch);
        }
        Ok(DegreeData {
            shape: shape.clone(),
            values,
        })
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn values(&self) -> &[Vec<Vec<u32>>] {
        &self.values
    }

    pub fn get(&self, c: &Cell) -> Result<u32, CombinatError> {
        self.values
            .get(c.comp)
            .and_then(|rows| rows.get(c.y as usize))
            .and_then(|row| row.get(c.x as usize))
            .copied()
            .ok_or(CombinatError::BoxOutsideShape {
                comp: c.comp,
                x: c.x,
                y: c.y,
            })
    }

    pub fn total(&self) -> u32 {
        self.values.iter().flatten().flatten().sum()
    }

    /// Total over one component.
    pub fn component_total(&self, comp: usize) -> u32 {
        self.values[comp].iter().flatten().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }

    /// Concatenate data on two tuples.
    pub fn join(&self, o: &DegreeData) -> DegreeData {
        let mut values = self.values.clone();
        values.extend(o.values.iter().cloned());
        DegreeData {
            shape: self.shape.join(&o.shape),
            values,
        }
    }

    pub fn split(&self, r1: usize) -> (DegreeData, DegreeData) {
        let (a, b) = self.shape.split(r1);
        (
            DegreeData {
                shape: a,
                values: self.values[..r1].to_vec(),
            },
            DegreeData {
                shape: b,
                values: self.values[r1..].to_vec(),
            },
        )
    }
}

impl fmt::Debug for DegreeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DegreeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// All monotone fillings of `shape` with total `d`, in lexicographic order of
/// the row-major value sequence.
pub fn enumerate_degree_data(shape: &MultiPartition, d: u32, mono: Monotonicity) -> Vec<DegreeData> {
    let cells = shape.cells();
    let mut cur = DegreeData::zero(shape);
    let mut out = Vec::new();
    fill(&cells, 0, d, mono, &mut cur, &mut out);
    out
}

fn fill(
    cells: &[Cell],
    i: usize,
    left: u32,
    mono: Monotonicity,
    cur: &mut DegreeData,
    out: &mut Vec<DegreeData>,
) {
    if i == cells.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let c = cells[i];
    let rows = &cur.values[c.comp];
    let left_nb = (c.x > 0).then(|| rows[c.y as usize][c.x as usize - 1]);
    let up_nb = (c.y > 0).then(|| rows[c.y as usize - 1][c.x as usize]);
    let (lo, hi) = match mono {
        Monotonicity::Increasing => (left_nb.into_iter().chain(up_nb).max().unwrap_or(0), left),
        Monotonicity::Decreasing => (0, left_nb.into_iter().chain(up_nb).min().unwrap_or(left).min(left)),
    };
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        cur.values[c.comp][c.y as usize][c.x as usize] = v;
        fill(cells, i + 1, left - v, mono, cur, out);
    }
    cur.values[c.comp][c.y as usize][c.x as usize] = 0;
}
