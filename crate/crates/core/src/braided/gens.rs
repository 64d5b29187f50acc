use std::fmt;

use crate::error::{Error, Result};

const FLAG_INVERTIBLE: u32 = 1;
const FLAG_CLOSED: u32 = 2;

/// A base generator of a braided coordinate ring.
///
/// The packed layout is `tag:8 | index:16 | flags:8`, so the derived order sorts
/// by instance tag first and declaration index second. Normal forms rely on that:
/// every generator of tag 1 precedes every generator of tag 2, which lets a
/// product over two tags be split as a tensor `left ⊗ right`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(u32);

impl Gen {
    pub fn new(index: u16, tag: u8, invertible: bool, closed: bool) -> Gen {
        let mut flags = 0;
        if invertible {
            flags |= FLAG_INVERTIBLE;
        }
        if closed {
            flags |= FLAG_CLOSED;
        }
        Gen(((tag as u32) << 24) | ((index as u32) << 8) | flags)
    }

    pub fn tag(self) -> u8 {
        (self.0 >> 24) as u8
    }

    pub fn index(self) -> u16 {
        ((self.0 >> 8) & 0xffff) as u16
    }

    pub fn is_invertible(self) -> bool {
        self.0 & FLAG_INVERTIBLE != 0
    }

    /// `d` kills a closed generator, so its primed companion is zero.
    pub fn is_closed(self) -> bool {
        self.0 & FLAG_CLOSED != 0
    }

    pub fn with_tag(self, tag: u8) -> Gen {
        Gen((self.0 & 0x00ff_ffff) | ((tag as u32) << 24))
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.index())?;
        if self.tag() != 0 {
            write!(f, "_{}", self.tag())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenInfo {
    pub name: String,
    pub invertible: bool,
    pub closed: bool,
}

/// Ordered generator declarations for one family of coordinate rings.
///
/// Instance tags distinguish disjoint copies (`A_1`, `A_2`, ...) of the same
/// generators; tag 0 prints without a suffix.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    infos: Vec<GenInfo>,
}

impl GeneratorSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a generator; declaration order is the normal-form order.
    pub fn declare(&mut self, name: &str, invertible: bool, closed: bool) -> Result<Gen> {
        if name.is_empty() || !name.chars().next().unwrap().is_ascii_alphabetic() {
            return Err(Error::Domain(format!("bad generator name {name:?}")));
        }
        if self.infos.iter().any(|g| g.name == name) {
            return Err(Error::Domain(format!("duplicate generator {name}")));
        }
        if self.infos.len() >= u16::MAX as usize {
            return Err(Error::Domain("too many generators".into()));
        }
        self.infos.push(GenInfo {
            name: name.to_string(),
            invertible,
            closed,
        });
        Ok(self.gen(self.infos.len() - 1, 0))
    }

    pub fn with(mut self, name: &str, invertible: bool, closed: bool) -> Self {
        self.declare(name, invertible, closed).expect("valid declaration");
        self
    }

    pub fn len(&self) -> usize {
        self.infos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.infos.is_empty()
    }

    pub fn info(&self, index: usize) -> &GenInfo {
        &self.infos[index]
    }

    pub fn gen(&self, index: usize, tag: u8) -> Gen {
        let info = &self.infos[index];
        Gen::new(index as u16, tag, info.invertible, info.closed)
    }

    pub fn gens(&self, tag: u8) -> Vec<Gen> {
        (0..self.infos.len()).map(|i| self.gen(i, tag)).collect()
    }

    pub fn by_name(&self, name: &str, tag: u8) -> Option<Gen> {
        self.infos
            .iter()
            .position(|g| g.name == name)
            .map(|i| self.gen(i, tag))
    }

    pub fn name_of(&self, g: Gen) -> String {
        let base = self
            .infos
            .get(g.index() as usize)
            .map(|i| i.name.clone())
            .unwrap_or_else(|| format!("g{}", g.index()));
        if g.tag() == 0 {
            base
        } else {
            format!("{}_{}", base, g.tag())
        }
    }

    /// Resolves `NAME` or `NAME_tag`.
    pub fn resolve(&self, ident: &str) -> Option<Gen> {
        if let Some(g) = self.by_name(ident, 0) {
            return Some(g);
        }
        let (base, tag) = ident.rsplit_once('_')?;
        let tag: u8 = tag.parse().ok()?;
        self.by_name(base, tag)
    }
}
