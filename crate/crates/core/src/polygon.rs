//! Bicoloured convex and once-punctured polygons.
//!
//! Vertices are indexed `0..m` counterclockwise. The text form is
//! `P:m=6;punctured=0;colours=BRBRBR`, colours listed from vertex 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn symbol(self) -> char {
        match self {
            Colour::Red => 'R',
            Colour::Blue => 'B',
        }
    }

    pub fn from_symbol(c: char) -> Option<Colour> {
        match c {
            'R' | 'r' => Some(Colour::Red),
            'B' | 'b' => Some(Colour::Blue),
            _ => None,
        }
    }
}

/// A convex `m`-gon (`m >= 4`) or once-punctured `m`-gon (`m >= 2`) with a
/// red/blue vertex labelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolygonSpec {
    m: usize,
    punctured: bool,
    colours: Vec<Colour>,
}

impl PolygonSpec {
    pub fn new(m: usize, punctured: bool, colours: Vec<Colour>) -> Result<Self> {
        let min = if punctured { 2 } else { 4 };
        if m < min {
            return Err(Error::InvalidSpec(format!(
                "a {} polygon needs at least {min} vertices, got m={m}",
                if punctured { "punctured" } else { "convex" }
            )));
        }
        if colours.len() != m {
            return Err(Error::InvalidSpec(format!(
                "colouring has {} entries but m={m}",
                colours.len()
            )));
        }
        Ok(PolygonSpec {
            m,
            punctured,
            colours,
        })
    }

    /// Convex polygon of any size `>= 3`; triangles only arise from cutting
    /// a punctured bigon.
    pub(crate) fn new_cut(m: usize, colours: Vec<Colour>) -> Self {
        debug_assert!(m >= 3 && colours.len() == m);
        PolygonSpec {
            m,
            punctured: false,
            colours,
        }
    }

    pub fn convex(colours: &str) -> Result<Self> {
        Self::from_colour_string(colours, false)
    }

    pub fn punctured(colours: &str) -> Result<Self> {
        Self::from_colour_string(colours, true)
    }

    /// Every vertex blue, so every arc is permitted.
    pub fn uncoloured(m: usize, punctured: bool) -> Result<Self> {
        Self::new(m, punctured, vec![Colour::Blue; m])
    }

    fn from_colour_string(colours: &str, punctured: bool) -> Result<Self> {
        let colours = parse_colours(colours)?;
        Self::new(colours.len(), punctured, colours)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_punctured(&self) -> bool {
        self.punctured
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v % self.m]
    }

    pub fn is_blue(&self, v: usize) -> bool {
        self.colour(v) == Colour::Blue
    }

    pub fn blue_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.m).filter(|&v| self.is_blue(v))
    }

    pub fn has_blue(&self) -> bool {
        self.colours.contains(&Colour::Blue)
    }

    pub fn has_red(&self) -> bool {
        self.colours.contains(&Colour::Red)
    }

    /// Both colours present.
    pub fn is_bicoloured(&self) -> bool {
        self.has_blue() && self.has_red()
    }

    /// The same polygon with every vertex blue.
    pub fn with_all_blue(&self) -> PolygonSpec {
        PolygonSpec {
            m: self.m,
            punctured: self.punctured,
            colours: vec![Colour::Blue; self.m],
        }
    }

    /// Dimension of a maximal face of the arc complex (`0` for a triangle,
    /// whose complex is just the empty face).
    pub fn dimension(&self) -> usize {
        self.triangulation_size().saturating_sub(1)
    }

    /// Number of arcs in a triangulation.
    pub fn triangulation_size(&self) -> usize {
        if self.punctured {
            self.m - 1
        } else {
            self.m - 3
        }
    }

    /// Number of non-trivial arcs: `m(m-3)/2` convex, `m(m-1)` punctured.
    pub fn arc_count(&self) -> usize {
        if self.punctured {
            self.m * (self.m - 1)
        } else {
            self.m * (self.m - 3) / 2
        }
    }

    pub(crate) fn require_blue(&self) -> Result<()> {
        if self.has_blue() {
            Ok(())
        } else {
            Err(Error::InvalidSpec(
                "the permitted subcomplex needs at least one blue vertex".into(),
            ))
        }
    }

    pub fn colour_string(&self) -> String {
        self.colours.iter().map(|c| c.symbol()).collect()
    }
}

fn parse_colours(s: &str) -> Result<Vec<Colour>> {
    s.chars()
        .map(|c| {
            Colour::from_symbol(c)
                .ok_or_else(|| Error::Parse(format!("unknown colour symbol {c:?} in {s:?}")))
        })
        .collect()
}

impl fmt::Display for PolygonSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P:m={};punctured={};colours={}",
            self.m,
            u8::from(self.punctured),
            self.colour_string()
        )
    }
}

impl FromStr for PolygonSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("P:")
            .ok_or_else(|| Error::Parse(format!("polygon spec must start with 'P:': {s:?}")))?;
        let mut m = None;
        let mut punctured = None;
        let mut colours = None;
        for field in body.split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {field:?}")))?;
            match key.trim() {
                "m" => {
                    m =
                        Some(value.trim().parse::<usize>().map_err(|e| {
                            Error::Parse(format!("bad vertex count {value:?}: {e}"))
                        })?)
                }
                "punctured" => {
                    punctured = Some(match value.trim() {
                        "0" | "false" => false,
                        "1" | "true" => true,
                        other => return Err(Error::Parse(format!("bad punctured flag {other:?}"))),
                    })
                }
                "colours" | "colors" => colours = Some(parse_colours(value.trim())?),
                other => return Err(Error::Parse(format!("unknown field {other:?}"))),
            }
        }
        let m = m.ok_or_else(|| Error::Parse("missing field m".into()))?;
        let punctured = punctured.unwrap_or(false);
        let colours = colours.unwrap_or_else(|| vec![Colour::Blue; m]);
        PolygonSpec::new(m, punctured, colours)
    }
}
