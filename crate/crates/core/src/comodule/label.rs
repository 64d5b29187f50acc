use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Simple GL(P)-representation `ξ^xi · χ^chi · T_t`, with `t = 0` meaning no
/// `T` factor. `T_{4k+t}` is stored as `χ^k T_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlpLabel {
    pub xi: bool,
    pub chi: i32,
    pub t: u8,
}

impl GlpLabel {
    pub const ONE: GlpLabel = GlpLabel {
        xi: false,
        chi: 0,
        t: 0,
    };
    pub const XI: GlpLabel = GlpLabel {
        xi: true,
        chi: 0,
        t: 0,
    };
    pub const CHI: GlpLabel = GlpLabel {
        xi: false,
        chi: 1,
        t: 0,
    };

    /// Canonical form: `ξT_n` with `n ≡ 2 (mod 4)` is `T_n`.
    pub fn new(xi: bool, chi: i32, t: u8) -> Result<GlpLabel> {
        if t > 3 {
            return Err(Error::Domain(format!("T index {t} out of range 0..=3")));
        }
        Ok(GlpLabel {
            xi: xi && t != 2,
            chi,
            t,
        })
    }

    pub fn chi_pow(k: i32) -> GlpLabel {
        GlpLabel {
            xi: false,
            chi: k,
            t: 0,
        }
    }

    /// `T_n` for `n ∉ 4ℤ`.
    pub fn t(n: i32) -> Result<GlpLabel> {
        if n.rem_euclid(4) == 0 {
            return Err(Error::Domain(format!(
                "T({n}) is not simple; use chi^{} instead",
                n.div_euclid(4)
            )));
        }
        GlpLabel::new(false, n.div_euclid(4), n.rem_euclid(4) as u8)
    }

    pub fn with_xi(self, xi: bool) -> GlpLabel {
        GlpLabel::new(self.xi ^ xi, self.chi, self.t).expect("t already in range")
    }

    pub fn twist_chi(self, k: i32) -> GlpLabel {
        GlpLabel {
            chi: self.chi + k,
            ..self
        }
    }

    pub fn degree(&self) -> i32 {
        4 * self.chi + self.t as i32
    }

    pub fn dim(&self) -> usize {
        if self.t == 0 {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for GlpLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.xi {
            parts.push("xi".into());
        }
        match self.chi {
            0 => {}
            1 => parts.push("chi".into()),
            k => parts.push(format!("chi^{k}")),
        }
        if self.t != 0 {
            parts.push(format!("T({})", self.t));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Parses a product of `1`, `xi`, `chi`, `chi^k` and `T(n)` factors into
/// its list of factors; a single label is a list with at most one `T`.
pub fn parse_glp_factors(input: &str) -> Result<Vec<GlpLabel>> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty label".into()));
    }
    s.split('*').map(parse_glp_factor).collect()
}

fn parse_glp_factor(f: &str) -> Result<GlpLabel> {
    let bad = || Error::Parse(format!("unrecognised label factor '{f}'"));
    let int = |s: &str| s.parse::<i32>().map_err(|_| bad());
    match f {
        "1" => Ok(GlpLabel::ONE),
        "xi" | "ξ" => Ok(GlpLabel::XI),
        "chi" | "χ" => Ok(GlpLabel::CHI),
        _ => {
            if let Some(k) = f.strip_prefix("chi^").or_else(|| f.strip_prefix("χ^")) {
                Ok(GlpLabel::chi_pow(int(k.trim_matches(|c| c == '(' || c == ')'))?))
            } else if let Some(rest) = f.strip_prefix("T(") {
                let n = rest.strip_suffix(')').ok_or_else(bad)?;
                GlpLabel::t(int(n)?)
            } else if let Some(n) = f.strip_prefix('T') {
                GlpLabel::t(int(n)?)
            } else {
                Err(bad())
            }
        }
    }
}

/// Label product when it is again a label: at most one factor may carry `T`.
pub fn combine_glp(factors: &[GlpLabel]) -> Result<GlpLabel> {
    let mut out = GlpLabel::ONE;
    let mut seen_t = false;
    for l in factors {
        if l.t != 0 {
            if seen_t {
                return Err(Error::Domain(
                    "a product of two T factors is a tensor product, not a label".into(),
                ));
            }
            seen_t = true;
        }
        out = GlpLabel::new(out.xi ^ l.xi, out.chi + l.chi, out.t + l.t)?;
    }
    Ok(out)
}

impl FromStr for GlpLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<GlpLabel> {
        combine_glp(&parse_glp_factors(s)?)
    }
}

/// Simple GL(1+P)-representation `L(n, T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gl1pLabel {
    pub n: i32,
    pub glp: GlpLabel,
}

impl Gl1pLabel {
    pub fn new(n: i32, glp: GlpLabel) -> Gl1pLabel {
        Gl1pLabel { n, glp }
    }

    pub fn degree(&self) -> i32 {
        self.n + self.glp.degree()
    }
}

impl fmt::Display for Gl1pLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.glp)
    }
}

impl FromStr for Gl1pLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Gl1pLabel> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected '(n, label)', got '{s}'")))?;
        let (n, rest) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected '(n, label)', got '{s}'")))?;
        let n = n
            .trim()
            .parse::<i32>()
            .map_err(|_| Error::Parse(format!("bad weight '{n}'")))?;
        Ok(Gl1pLabel::new(n, rest.parse()?))
    }
}

/// Label of a simple comodule over any of the supported groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    Glp(GlpLabel),
    Gl1p(Gl1pLabel),
    /// Tuple of GL(P) labels, highest weights for GL(nP).
    Glnp(Vec<GlpLabel>),
    /// `L_n` of `G'_m`.
    H1(i32),
    /// `ε ∈ {0, 1}` for `M₁`: trivial or `L_ξ`.
    M1(u8),
    /// Characters of the torus `G_m`.
    Gm(i32),
    Trivial,
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Glp(l) => write!(f, "{l}"),
            IrrepLabel::Gl1p(l) => write!(f, "{l}"),
            IrrepLabel::Glnp(ls) => {
                let parts: Vec<String> = ls.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
            IrrepLabel::H1(n) => write!(f, "L({n})"),
            IrrepLabel::M1(0) => write!(f, "1"),
            IrrepLabel::M1(_) => write!(f, "L_xi"),
            IrrepLabel::Gm(n) => write!(f, "t^{n}"),
            IrrepLabel::Trivial => write!(f, "1"),
        }
    }
}

impl Serialize for IrrepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Serialize for GlpLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Serialize for Gl1pLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses `[l1, l2, ...]` into GL(P) labels.
pub fn parse_tuple(s: &str) -> Result<Vec<GlpLabel>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected '[label,...]', got '{s}'")))?;
    inner.split(',').map(str::parse).collect()
}
