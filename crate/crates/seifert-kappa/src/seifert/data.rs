//! Seifert data of integer homology spheres and the Brieskorn families.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::Rational;

/// Σ(α₁, …, αₙ): pairwise coprime exceptional fiber orders, each ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertData {
    alphas: Vec<i64>,
}

impl SeifertData {
    /// Validates and wraps the fiber orders. An empty list is allowed and
    /// describes the fiber-free case α = 1.
    pub fn new(alphas: Vec<i64>) -> Result<Self> {
        for &a in &alphas {
            if a < 2 {
                return Err(Error::InvalidInput(format!("fiber orders must be >= 2, got {a}")));
            }
        }
        for (i, &a) in alphas.iter().enumerate() {
            for &b in &alphas[i + 1..] {
                if a.gcd(&b) != 1 {
                    return Err(Error::NotCoprime(a, b));
                }
            }
        }
        alphas
            .iter()
            .try_fold(1i64, |acc, &a| acc.checked_mul(a))
            .ok_or(Error::Overflow("fiber product"))?;
        Ok(SeifertData { alphas })
    }

    /// Σ(a, b, c).
    pub fn brieskorn(a: i64, b: i64, c: i64) -> Result<Self> {
        SeifertData::new(vec![a, b, c])
    }

    /// The fiber orders.
    pub fn alphas(&self) -> &[i64] {
        &self.alphas
    }

    /// α = Π α_i.
    pub fn alpha(&self) -> i64 {
        self.alphas.iter().product()
    }

    /// Whether some α_i is even, i.e. ρ(Y) = 1/2.
    pub fn has_even_fiber(&self) -> bool {
        self.alphas.iter().any(|a| a % 2 == 0)
    }

    /// ρ(Y) ∈ {0, 1/2}.
    pub fn rho(&self) -> Rational {
        if self.has_even_fiber() {
            Rational::from_frac(1, 2)
        } else {
            Rational::from_int(0)
        }
    }

    /// Checks gcd(r, α_i) = 1 for every fiber.
    pub fn check_coprime_order(&self, r: i64) -> Result<()> {
        match self.alphas.iter().find(|a| a.gcd(&r) != 1) {
            Some(&alpha) => Err(Error::NotCoprimeToFibers { r, alpha }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.alphas.iter().map(|a| a.to_string()).collect();
        write!(f, "sigma({})", parts.join(","))
    }
}

impl FromStr for SeifertData {
    type Err = Error;

    /// Accepts `sigma(2,3,11)`, `Σ(2,3,11)` or `2,3,11`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix("sigma(")
            .or_else(|| t.strip_prefix("Σ("))
            .map(|r| r.strip_suffix(')'))
            .unwrap_or(Some(t))
            .ok_or_else(|| Error::InvalidInput(format!("unbalanced parentheses in {s:?}")))?;
        let alphas = inner
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidInput(format!("bad Seifert data {s:?}: {e}")))?;
        SeifertData::new(alphas)
    }
}

/// The four families Σ(2, 3, 12n + c) with c ∈ {5, −5, −1, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BrieskornFamily {
    /// Σ(2, 3, 12n + 5), n ≥ 0.
    Plus5,
    /// Σ(2, 3, 12n − 5), n ≥ 1.
    Minus5,
    /// Σ(2, 3, 12n − 1), n ≥ 1.
    Minus1,
    /// Σ(2, 3, 12n + 1), n ≥ 1.
    Plus1,
}

impl BrieskornFamily {
    /// All four families.
    pub const ALL: [BrieskornFamily; 4] =
        [BrieskornFamily::Plus5, BrieskornFamily::Minus5, BrieskornFamily::Minus1, BrieskornFamily::Plus1];

    /// The offset c in 12n + c.
    pub fn offset(self) -> i64 {
        match self {
            BrieskornFamily::Plus5 => 5,
            BrieskornFamily::Minus5 => -5,
            BrieskornFamily::Minus1 => -1,
            BrieskornFamily::Plus1 => 1,
        }
    }

    /// Smallest admissible n.
    pub fn min_n(self) -> i64 {
        if self == BrieskornFamily::Plus5 {
            0
        } else {
            1
        }
    }

    /// The third fiber 12n + c.
    pub fn third_fiber(self, n: i64) -> i64 {
        12 * n + self.offset()
    }

    /// Σ(2, 3, 12n + c).
    pub fn seifert(self, n: i64) -> Result<SeifertData> {
        self.check_n(n)?;
        SeifertData::brieskorn(2, 3, self.third_fiber(n))
    }

    /// Rejects n below the family's range.
    pub fn check_n(self, n: i64) -> Result<()> {
        if n < self.min_n() {
            return Err(Error::InvalidInput(format!("family {self} needs n >= {}, got {n}", self.min_n())));
        }
        Ok(())
    }

    /// The constant c' with rot(0;0,0,k) = −½(12(n−k) − c').
    pub fn rotation_constant(self) -> i64 {
        match self {
            BrieskornFamily::Plus5 => 1,
            BrieskornFamily::Minus5 => 11,
            BrieskornFamily::Minus1 => 7,
            BrieskornFamily::Plus1 => 5,
        }
    }

    /// Recognizes Σ(2, 3, m) for m coprime to 6, returning the family and n.
    pub fn classify(y: &SeifertData) -> Option<(BrieskornFamily, i64)> {
        let mut a = y.alphas().to_vec();
        a.sort_unstable();
        if a.len() != 3 || a[0] != 2 || a[1] != 3 {
            return None;
        }
        let m = a[2];
        BrieskornFamily::ALL.into_iter().find_map(|f| {
            let n = (m - f.offset()).div_euclid(12);
            (f.third_fiber(n) == m && n >= f.min_n()).then_some((f, n))
        })
    }
}

impl fmt::Display for BrieskornFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BrieskornFamily::Plus5 => "12n+5",
            BrieskornFamily::Minus5 => "12n-5",
            BrieskornFamily::Minus1 => "12n-1",
            BrieskornFamily::Plus1 => "12n+1",
        })
    }
}

impl FromStr for BrieskornFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "12n+5" => Ok(BrieskornFamily::Plus5),
            "12n-5" => Ok(BrieskornFamily::Minus5),
            "12n-1" => Ok(BrieskornFamily::Minus1),
            "12n+1" => Ok(BrieskornFamily::Plus1),
            _ => Err(Error::UnsupportedFamily(s.to_string())),
        }
    }
}
