//! Scheme descriptions: `ruling:(1,0)@((1:0),(0:1))^3`, `ruling:cone@(1:0:0:0)^2`,
//! `fat@((1:2),(1:3))`, `cusp:h=2@((1:2),(1:3));tangent=(1,1)`.

use quadcusp::exactalg::Field;
use quadcusp::parse::parse_pair;
use quadcusp::surface::{parse_point, Ambient, RulingClass};
use quadcusp::zeroschemes::{cusp_scheme, fat_point, ruling_divisor_through, ZeroScheme};
use quadcusp::{Error, Result};
use rand::RngCore;

fn perr(msg: String) -> Error {
    Error::Parse(msg)
}

pub fn parse_scheme<F: Field>(
    k: &F,
    ambient: Ambient,
    text: &str,
    rng: &mut dyn RngCore,
) -> Result<ZeroScheme<F::Elem>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (head, rest) = t.split_once('@').ok_or_else(|| perr(format!("scheme '{text}' needs '@<point>'")))?;
    if let Some(class) = head.strip_prefix("ruling:") {
        let class = match class {
            "(1,0)" => RulingClass::X,
            "(0,1)" => RulingClass::Y,
            "cone" => RulingClass::ConeLine,
            _ => return Err(perr(format!("unknown ruling class '{class}'"))),
        };
        let (pt, m) = rest.rsplit_once('^').unwrap_or((rest, "1"));
        let m: usize = m.parse().map_err(|_| perr(format!("bad multiplicity '{m}'")))?;
        return ruling_divisor_through(k, class, &parse_point(k, ambient, pt)?, m);
    }
    if head == "fat" {
        return fat_point(k, &parse_point(k, ambient, rest)?);
    }
    if let Some(h) = head.strip_prefix("cusp:h=") {
        let h: usize = h.parse().map_err(|_| perr(format!("bad cusp order '{h}'")))?;
        let (pt, tangent) = match rest.split_once(";tangent=") {
            Some((pt, tan)) => {
                let (a, b) = parse_pair(tan)?;
                (pt, [k.from_rational(&a)?, k.from_rational(&b)?])
            }
            None => (rest, [k.one(), nonzero(k, rng)]),
        };
        return cusp_scheme(k, &parse_point(k, ambient, pt)?, tangent, h);
    }
    Err(perr(format!("unknown scheme kind '{head}'")))
}

fn nonzero<F: Field>(k: &F, rng: &mut dyn RngCore) -> F::Elem {
    loop {
        let a = k.random(rng);
        if !k.is_zero(&a) {
            return a;
        }
    }
}
