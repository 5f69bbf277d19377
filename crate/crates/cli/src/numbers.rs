use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;
use tutte_atlas_core::exact_poly::{parse_rational, rational_to_f64};

/// A number with 17 significant digits, enough to read back the same double.
pub fn fmt17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// `f64` that serializes to JSON with 17 significant digits; non-finite
/// values become `null`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sig17(pub f64);

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(fmt17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Sig17 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Sig17(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

/// `q` as typed on the command line, with its exact value.
#[derive(Clone, Debug, PartialEq)]
pub struct QValue {
    pub text: String,
    pub exact: BigRational,
    pub value: f64,
}

impl FromStr for QValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let exact = parse_rational(s).map_err(|e| e.to_string())?;
        let value = rational_to_f64(&exact);
        if value.is_nan() || value <= 0.0 {
            return Err(format!("q must be positive, got {s}"));
        }
        Ok(Self { text: s.to_string(), exact, value })
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exact)
    }
}

/// FNV-1a over the canonical form of a configuration; seeds the root finder so
/// that identical configurations give identical output.
pub fn config_seed(parts: &[&str]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for part in parts {
        for b in part.bytes().chain(std::iter::once(0x1f)) {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// `lo:hi:steps`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Range {
    pub fn values(&self) -> Vec<f64> {
        if self.steps <= 1 {
            return vec![self.lo];
        }
        (0..self.steps).map(|k| self.lo + (self.hi - self.lo) * k as f64 / (self.steps - 1) as f64).collect()
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, steps] = parts[..] else {
            return Err(format!("expected lo:hi:steps, got {s:?}"));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
        let steps = steps.trim().parse::<usize>().map_err(|e| format!("{steps:?}: {e}"))?;
        if steps == 0 {
            return Err("steps must be at least 1".into());
        }
        Ok(Self { lo: num(lo)?, hi: num(hi)?, steps })
    }
}

/// `re0:re1:steps,im0:im1:steps`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub re: Range,
    pub im: Range,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (re, im) =
            s.split_once(',').ok_or_else(|| format!("expected two ranges separated by a comma, got {s:?}"))?;
        Ok(Self { re: re.parse()?, im: im.parse()? })
    }
}

/// A complex number written `re,im`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point(pub num_complex::Complex64);

impl FromStr for Point {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (re, im) = s.split_once(',').ok_or_else(|| format!("expected re,im, got {s:?}"))?;
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
        Ok(Self(num_complex::Complex64::new(num(re)?, num(im)?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, -7.943_921_952_009_91, 1e-300, 123456789.0] {
            let s = fmt17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let digits = s.split('e').next().unwrap().chars().filter(char::is_ascii_digit).count();
            assert_eq!(digits, 17);
        }
        assert_eq!(serde_json::to_string(&Sig17(0.5)).unwrap(), "5.0000000000000000e-1");
        assert_eq!(serde_json::to_string(&Sig17(f64::NAN)).unwrap(), "null");
    }

    #[test]
    fn q_forms() {
        let q: QValue = "2.5".parse().unwrap();
        assert_eq!(q.to_string(), "5/2");
        assert_eq!("3/2".parse::<QValue>().unwrap().value, 1.5);
        assert!("-1".parse::<QValue>().is_err());
        assert!("abc".parse::<QValue>().is_err());
    }

    #[test]
    fn grids() {
        let g: Grid = "-1:1:3,0:2:2".parse().unwrap();
        assert_eq!(g.re.values(), vec![-1.0, 0.0, 1.0]);
        assert_eq!(g.im.values(), vec![0.0, 2.0]);
        assert!("1:2".parse::<Range>().is_err());
    }

    #[test]
    fn seeds_depend_on_every_part() {
        assert_ne!(config_seed(&["a", "bc"]), config_seed(&["ab", "c"]));
        assert_eq!(config_seed(&["zeros", "wheel"]), config_seed(&["zeros", "wheel"]));
    }
}
