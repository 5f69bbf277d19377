//! JSON forms that keep every digit: coefficients travel as decimal strings.
//!
//! ```text
//! {"var": "xy", "terms": [[i, j, "coeff"], ...]}
//! {"coeffs": ["num/den", ...]}
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, BiPoly, ZPoly};

#[derive(Serialize, Deserialize)]
struct BiPolyJson {
    var: String,
    terms: Vec<(u32, u32, String)>,
}

#[derive(Serialize, Deserialize)]
struct ZPolyJson {
    coeffs: Vec<String>,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BiPolyJson { var: "xy".into(), terms: self.terms().map(|((i, j), c)| (i, j, c.to_string())).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BiPolyJson::deserialize(d)?;
        if raw.var != "xy" {
            return Err(D::Error::custom(format!("expected var \"xy\", got {:?}", raw.var)));
        }
        let mut p = BiPoly::zero();
        for (i, j, c) in raw.terms {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term((i, j), &c);
        }
        Ok(p)
    }
}

impl Serialize for ZPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ZPolyJson { coeffs: self.coeffs().iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ZPolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| parse_rational(c).map_err(D::Error::custom))
            .collect::<Result<Vec<BigRational>, _>>()?;
        Ok(ZPoly::new(coeffs))
    }
}
