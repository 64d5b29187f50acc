use crate::braided::{BraidedPoly, Gen, GeneratorSet, PolyMatrix, Substitution};
use crate::error::{Error, Result};

use super::spec::GroupSpec;

/// A group scheme together with its coordinate ring and tautological point.
///
/// Every coordinate generator occurs verbatim as one entry of the generic
/// matrix; `positions` records where, so any point in the same shape can be
/// read back as a substitution of the coordinates.
#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    ring: GeneratorSet,
    positions: Vec<(usize, usize)>,
    template: Vec<Vec<Entry>>,
}

/// Entry of the generic matrix as a sum of (generator, primed?) or constants.
#[derive(Clone, Debug, Default)]
struct Entry {
    one: bool,
    parts: Vec<(usize, bool)>,
}

impl Entry {
    fn zero() -> Self {
        Entry::default()
    }
    fn one() -> Self {
        Entry {
            one: true,
            parts: vec![],
        }
    }
    fn gen(i: usize) -> Self {
        Entry {
            one: false,
            parts: vec![(i, false)],
        }
    }
    fn prime(i: usize) -> Self {
        Entry {
            one: false,
            parts: vec![(i, true)],
        }
    }
    fn plus(mut self, other: Entry) -> Self {
        self.one ^= other.one;
        self.parts.extend(other.parts);
        self
    }
}

struct Builder {
    ring: GeneratorSet,
    positions: Vec<(usize, usize)>,
    template: Vec<Vec<Entry>>,
}

impl Builder {
    fn new(size: usize) -> Self {
        Builder {
            ring: GeneratorSet::new(),
            positions: Vec::new(),
            template: vec![vec![Entry::zero(); size]; size],
        }
    }

    fn declare(&mut self, name: &str, invertible: bool, closed: bool, pos: (usize, usize)) -> usize {
        self.ring
            .declare(name, invertible, closed)
            .expect("distinct generator names");
        self.positions.push(pos);
        self.positions.len() - 1
    }

    fn set(&mut self, pos: (usize, usize), e: Entry) {
        self.template[pos.0][pos.1] = e;
    }

    fn identity_block(&mut self, offset: usize, n: usize) {
        for i in 0..n {
            self.set((offset + i, offset + i), Entry::one());
        }
    }
}

fn name(base: &str, i: usize, j: usize, single: bool) -> String {
    if single {
        base.to_string()
    } else {
        format!("{base}{}{}", i + 1, j + 1)
    }
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Group> {
        use GroupSpec::*;
        let size = spec.size();
        if size == 0 {
            return Err(Error::Domain(format!("{spec} is the trivial group")));
        }
        let mut b = Builder::new(size);
        match spec {
            Gl { m, n } | Borel { m, n } | Levi { m, n } => {
                let with_b = matches!(spec, Gl { .. });
                let with_c = !matches!(spec, Levi { .. });
                // GL(P) and GL(1+P) use the single-letter names A..F
                let glp = m == 0 && n == 1;
                let gl1p = m == 1 && n == 1;
                let (nf, nb, nc, nd, ne) = if glp {
                    ("F", "B", "C", "A", "B")
                } else if gl1p {
                    ("A", "B", "C", "E", "F")
                } else {
                    ("F", "B", "C", "D", "E")
                };
                let single = glp || gl1p;
                let mut f = vec![vec![0; m]; m];
                for (i, row) in f.iter_mut().enumerate() {
                    for (j, slot) in row.iter_mut().enumerate() {
                        *slot = b.declare(&name(nf, i, j, single), m == 1 && i == j, true, (i, j));
                    }
                }
                if with_b {
                    for i in 0..n {
                        for j in 0..m {
                            let g = b.declare(&name(nb, i, j, single), false, false, (m + n + i, j));
                            b.set((m + n + i, j), Entry::gen(g));
                            b.set((m + i, j), Entry::prime(g));
                        }
                    }
                }
                if with_c {
                    for i in 0..m {
                        for j in 0..n {
                            let g = b.declare(&name(nc, i, j, single), false, false, (i, m + j));
                            b.set((i, m + j), Entry::gen(g));
                            b.set((i, m + n + j), Entry::prime(g));
                        }
                    }
                }
                let mut d = vec![vec![0; n]; n];
                for (i, row) in d.iter_mut().enumerate() {
                    for (j, slot) in row.iter_mut().enumerate() {
                        *slot = b.declare(&name(nd, i, j, single), n == 1 && i == j, false, (m + i, m + j));
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        let e = b.declare(&name(ne, i, j, single), false, false, (m + n + i, m + j));
                        b.set((m + n + i, m + j), Entry::gen(e));
                        b.set((m + n + i, m + n + j), Entry::gen(d[i][j]).plus(Entry::prime(e)));
                        b.set((m + i, m + j), Entry::gen(d[i][j]));
                        b.set((m + i, m + n + j), Entry::prime(d[i][j]));
                    }
                }
                for (i, row) in f.iter().enumerate() {
                    for (j, &g) in row.iter().enumerate() {
                        b.set((i, j), Entry::gen(g));
                    }
                }
            }
            GlClassical(n) => {
                for i in 0..n {
                    for j in 0..n {
                        let g = b.declare(&name("F", i, j, n == 1), n == 1, true, (i, j));
                        b.set((i, j), Entry::gen(g));
                    }
                }
            }
            M(n) => {
                b.identity_block(0, n);
                for i in 0..n {
                    for j in 0..n {
                        let g = b.declare(&name("X", i, j, n == 1), false, false, (n + i, j));
                        b.set((n + i, j), Entry::gen(g));
                        let diag = if i == j { Entry::one() } else { Entry::zero() };
                        b.set((n + i, n + j), diag.plus(Entry::prime(g)));
                    }
                }
            }
            H(n) => {
                for i in 0..n {
                    for j in 0..n {
                        let g = b.declare(&name(if n == 1 { "a" } else { "D" }, i, j, n == 1), n == 1, false, (i, j));
                        b.set((i, j), Entry::gen(g));
                        b.set((n + i, n + j), Entry::gen(g));
                        b.set((i, n + j), Entry::prime(g));
                    }
                }
            }
            End(n) => {
                b.identity_block(0, 2 * n);
                for i in 0..n {
                    for j in 0..n {
                        let g = b.declare(&name("X", i, j, n == 1), false, true, (n + i, j));
                        b.set((n + i, j), Entry::gen(g));
                    }
                }
            }
            GStar(n) => {
                for i in 0..n {
                    for j in 0..n {
                        let g = b.declare(&name("C", i, j, n == 1), n == 1, true, (i, j));
                        b.set((i, j), Entry::gen(g));
                        b.set((n + i, n + j), Entry::gen(g));
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        let g = b.declare(&name("D", i, j, n == 1), false, true, (n + i, j));
                        b.set((n + i, j), Entry::gen(g));
                    }
                }
            }
            Ga => {
                b.identity_block(0, 2);
                let t = b.declare("T", false, true, (1, 0));
                b.set((1, 0), Entry::gen(t));
            }
            GaPrime => {
                b.identity_block(0, 3);
                let t = b.declare("T", false, false, (2, 0));
                b.set((2, 0), Entry::gen(t));
                b.set((1, 0), Entry::prime(t));
            }
            Gm => {
                let t = b.declare("T", true, true, (0, 0));
                b.set((0, 0), Entry::gen(t));
            }
        }
        Ok(Group {
            spec,
            ring: b.ring,
            positions: b.positions,
            template: b.template,
        })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn ring(&self) -> &GeneratorSet {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.template.len()
    }

    pub fn gen(&self, name: &str) -> Gen {
        self.ring
            .by_name(name, 0)
            .unwrap_or_else(|| panic!("{} has no coordinate {name}", self.spec))
    }

    pub fn var(&self, name: &str) -> BraidedPoly {
        BraidedPoly::var(self.gen(name))
    }

    pub fn parse(&self, s: &str) -> Result<BraidedPoly> {
        crate::braided::parse_poly(&self.ring, s)
    }

    pub fn position(&self, g: Gen) -> (usize, usize) {
        self.positions[g.index() as usize]
    }

    /// The tautological point with coordinates of instance `tag`.
    pub fn generic(&self, tag: u8) -> PolyMatrix {
        let n = self.size();
        PolyMatrix::from_fn(n, n, |i, j| {
            let e = &self.template[i][j];
            let mut p = if e.one {
                BraidedPoly::one()
            } else {
                BraidedPoly::zero()
            };
            for &(g, primed) in &e.parts {
                let gen = self.ring.gen(g, tag);
                p += if primed {
                    BraidedPoly::prime(gen)
                } else {
                    BraidedPoly::var(gen)
                };
            }
            p
        })
    }

    /// `g_{t1} · g_{t2}`; the entries at the coordinate positions are `Δ`.
    pub fn multiply_generic(&self, t1: u8, t2: u8) -> Result<PolyMatrix> {
        if t1 == t2 {
            return Err(Error::Contract(format!(
                "multiplying two points with the same instance tag {t1}"
            )));
        }
        Ok(self.generic(t1).mul(&self.generic(t2)))
    }

    /// Reads coordinates off a point of the same shape.
    pub fn coordinates(&self, point: &PolyMatrix) -> Result<Substitution> {
        let mut s = Substitution::new();
        for (i, &pos) in self.positions.iter().enumerate() {
            s.bind(self.ring.gen(i, 0), point[pos].clone())?;
        }
        Ok(s)
    }

    /// Substitution `x ↦ Δ(x)` into the two-tag ring (tags 1 and 2).
    pub fn coproduct(&self) -> Result<Substitution> {
        self.coordinates(&self.multiply_generic(1, 2)?)
    }

    pub fn counit(&self) -> Substitution {
        self.coordinates(&PolyMatrix::identity(self.size()))
            .expect("identity lies in every group")
    }

    pub fn antipode(&self) -> Result<Substitution> {
        self.coordinates(&self.inverse_generic(0)?)
    }

    /// Inverse of the tautological point by unit-pivot elimination, checked on
    /// both sides.
    pub fn inverse_generic(&self, tag: u8) -> Result<PolyMatrix> {
        let g = self.generic(tag);
        let inv = g.inverse().map_err(|e| match e {
            Error::Unsupported(msg) => {
                Error::Unsupported(format!("inverse of the generic point of {}: {msg}", self.spec))
            }
            other => other,
        })?;
        if !g.mul(&inv).is_identity() || !inv.mul(&g).is_identity() {
            return Err(Error::Contract(format!("inverse check failed for {}", self.spec)));
        }
        Ok(inv)
    }

    /// Whether `point` has this group's shape: closed coordinates are read off
    /// as d-closed values and every entry is the matching linear combination of
    /// the values read off and their derivatives.
    pub fn in_shape(&self, point: &PolyMatrix) -> bool {
        let n = self.size();
        if point.nrows() != n || point.ncols() != n {
            return false;
        }
        let values: Vec<&BraidedPoly> = self.positions.iter().map(|&pos| &point[pos]).collect();
        for (i, v) in values.iter().enumerate() {
            if self.ring.info(i).closed && !v.derive().is_zero() {
                return false;
            }
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = &self.template[i][j];
                let mut expected = if e.one {
                    BraidedPoly::one()
                } else {
                    BraidedPoly::zero()
                };
                for &(g, primed) in &e.parts {
                    expected += if primed {
                        values[g].derive()
                    } else {
                        values[g].clone()
                    };
                }
                expected == point[(i, j)]
            })
        })
    }
}
