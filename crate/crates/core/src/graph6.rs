//! Short-form graph6 (at most 62 vertices).
//!
//! The vertex count is one byte `n + 63`; the upper triangle of the adjacency
//! matrix follows column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ..`),
//! packed six bits per byte, big-endian, zero padded, each byte offset by 63.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::image::DigitalImage;

pub const MAX_GRAPH6_VERTICES: usize = 62;

pub fn encode_graph6(image: &DigitalImage) -> String {
    let n = image.n();
    assert!(
        n <= MAX_GRAPH6_VERTICES,
        "short-form graph6 holds at most {MAX_GRAPH6_VERTICES} vertices"
    );
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(image.adjacent(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<DigitalImage> {
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| err(0, "empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, "invalid character"));
    }
    if first == 126 {
        return Err(err(0, "long-form graph6 (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos + 1, "invalid character"));
    }
    if body.len() != expected {
        return Err(err(
            1 + body.len().min(expected),
            &format!(
                "expected {expected} data bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(expected, "nonzero padding bits"));
        }
    }
    DigitalImage::new(n, &edges)
}

impl Serialize for DigitalImage {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&encode_graph6(self))
    }
}

impl<'de> Deserialize<'de> for DigitalImage {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_graph6(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_known_encodings() {
        assert_eq!(parse_graph6("@").unwrap(), DigitalImage::point());
        assert_eq!(encode_graph6(&DigitalImage::point()), "@");
        let edge = DigitalImage::new(2, &[(0, 1)]).unwrap();
        assert_eq!(parse_graph6("A_").unwrap(), edge);
        assert_eq!(encode_graph6(&edge), "A_");
        assert_eq!(
            parse_graph6("Bg").unwrap(),
            DigitalImage::interval(2).unwrap()
        );
        assert_eq!(encode_graph6(&DigitalImage::discrete(0).unwrap()), "?");
    }

    #[test]
    fn matches_petgraph_reference_string() {
        // a–c, a–e, b–d, d–e on five vertices
        let x = DigitalImage::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&x), "DQc");
    }

    #[test]
    fn reports_byte_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("B"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("Bgg"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("D Qc"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { .. })));
        assert!(parse_graph6("~").is_err());
    }

    fn arb_image() -> impl Strategy<Value = DigitalImage> {
        (0usize..=20).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                DigitalImage::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trips(x in arb_image()) {
            let s = encode_graph6(&x);
            prop_assert_eq!(parse_graph6(&s).unwrap(), x);
            prop_assert_eq!(encode_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
