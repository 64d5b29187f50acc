use std::fmt;

use crate::error::{Error, Result};

/// The group schemes with an implemented generic point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GroupSpec {
    /// `GL(m·1 + n·P)`.
    Gl { m: usize, n: usize },
    /// Block upper triangular parabolic `B_{m,n}`.
    Borel { m: usize, n: usize },
    /// Block diagonal Levi `GL(m) × GL(nP)`.
    Levi { m: usize, n: usize },
    /// Ordinary `GL(n)`: closed entries.
    GlClassical(usize),
    /// `X * Y = X + Y + X'Y` on `n × n` matrices; `M(1)` is `M1`.
    M(usize),
    /// Invertible `n × n` matrices under multiplication; `H(1)` is `Gm'`.
    H(usize),
    /// Closed `n × n` matrices under addition.
    End(usize),
    /// `(C 0; D C)` with `C`, `D` closed.
    GStar(usize),
    Ga,
    GaPrime,
    Gm,
}

impl GroupSpec {
    pub const GLP: GroupSpec = GroupSpec::Gl { m: 0, n: 1 };
    pub const GL1P: GroupSpec = GroupSpec::Gl { m: 1, n: 1 };
    pub const M1: GroupSpec = GroupSpec::M(1);
    pub const GM_PRIME: GroupSpec = GroupSpec::H(1);

    /// Side length of the generic matrix.
    pub fn size(self) -> usize {
        use GroupSpec::*;
        match self {
            Gl { m, n } | Borel { m, n } | Levi { m, n } => m + 2 * n,
            GlClassical(n) => n,
            M(n) | H(n) | End(n) | GStar(n) => 2 * n,
            Ga => 2,
            GaPrime => 3,
            Gm => 1,
        }
    }

    pub fn parse(input: &str) -> Result<GroupSpec> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.replace('′', "'").replace('𝟙', "1");
        let bad = || Error::Parse(format!("unknown group {input:?}"));
        let simple = match s.as_str() {
            "M1" | "M_1" => Some(GroupSpec::M1),
            "Gm'" | "G'_m" | "H1" => Some(GroupSpec::GM_PRIME),
            "Ga'" | "G'_a" => Some(GroupSpec::GaPrime),
            "Ga" | "G_a" => Some(GroupSpec::Ga),
            "Gm" | "G_m" => Some(GroupSpec::Gm),
            _ => None,
        };
        if let Some(g) = simple {
            return Ok(g);
        }
        let (head, args) = s
            .strip_suffix(')')
            .and_then(|t| t.split_once('('))
            .ok_or_else(bad)?;
        let nums = |a: &str| -> Result<Vec<usize>> {
            a.split(',')
                .map(|x| x.parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        match head {
            "GL" | "Levi" if args.contains('P') || args.contains('+') => {
                let (m, n) = parse_mn(args).ok_or_else(bad)?;
                Ok(if head == "GL" {
                    GroupSpec::Gl { m, n }
                } else {
                    GroupSpec::Levi { m, n }
                })
            }
            "GL" => {
                let v = nums(args)?;
                match v.as_slice() {
                    [n] => Ok(GroupSpec::GlClassical(*n)),
                    _ => Err(bad()),
                }
            }
            "B" | "M" | "H" | "End" | "G*" | "Gstar" => {
                let v = nums(args)?;
                match (head, v.as_slice()) {
                    ("B", [m, n]) => Ok(GroupSpec::Borel { m: *m, n: *n }),
                    ("M", [n]) => Ok(GroupSpec::M(*n)),
                    ("H", [n]) => Ok(GroupSpec::H(*n)),
                    ("End", [n]) => Ok(GroupSpec::End(*n)),
                    ("G*" | "Gstar", [n]) => Ok(GroupSpec::GStar(*n)),
                    _ => Err(bad()),
                }
            }
            _ => Err(bad()),
        }
    }
}

/// `m+nP`, `nP`, `P`, `m`.
fn parse_mn(s: &str) -> Option<(usize, usize)> {
    let mut m = 0;
    let mut n = 0;
    for part in s.split('+') {
        if let Some(k) = part.strip_suffix('P') {
            n += if k.is_empty() { 1 } else { k.parse().ok()? };
        } else {
            m += part.parse::<usize>().ok()?;
        }
    }
    Some((m, n))
}

fn object_name(m: usize, n: usize) -> String {
    let p = match n {
        0 => String::new(),
        1 => "P".into(),
        k => format!("{k}P"),
    };
    match (m, n) {
        (m, 0) => format!("{m}"),
        (0, _) => p,
        (m, _) => format!("{m}+{p}"),
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match *self {
            Gl { m, n } => write!(f, "GL({})", object_name(m, n)),
            Borel { m, n } => write!(f, "B({m},{n})"),
            Levi { m, n } => write!(f, "Levi({})", object_name(m, n)),
            GlClassical(n) => write!(f, "GL({n})"),
            M(1) => write!(f, "M1"),
            M(n) => write!(f, "M({n})"),
            H(1) => write!(f, "Gm'"),
            H(n) => write!(f, "H({n})"),
            End(n) => write!(f, "End({n})"),
            GStar(n) => write!(f, "G*({n})"),
            Ga => write!(f, "Ga"),
            GaPrime => write!(f, "Ga'"),
            Gm => write!(f, "Gm"),
        }
    }
}
