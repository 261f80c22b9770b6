//! Named images used throughout the tests, the catalog report and the CLI.

use crate::error::{Error, Result};
use crate::image::DigitalImage;

/// Every name accepted by [`named_image`], in catalog order.
pub const FIXTURE_NAMES: &[&str] = &[
    "C5",
    "C6",
    "C7",
    "C8",
    "IMG7_1",
    "IMG7_2",
    "IMG8_1",
    "IMG8_2",
    "IMG8_3",
    "IMG8_4",
    "X6",
    "KLEIN",
    "NESTED",
    "APPENDIX_1",
    "APPENDIX_2",
    "APPENDIX_3",
    "APPENDIX_4",
    "APPENDIX_5",
    "APPENDIX_6",
    "APPENDIX_7",
    "APPENDIX_8",
    "APPENDIX_9",
    "APPENDIX_10",
    "APPENDIX_11",
    "APPENDIX_12",
    "APPENDIX_13",
    "APPENDIX_14",
    "APPENDIX_15",
];

const IMG7_1: &[(usize, usize)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 0),
    (6, 0),
    (6, 3),
];
const IMG7_2: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (1, 4),
    (0, 3),
    (3, 6),
    (4, 6),
    (5, 6),
    (1, 2),
    (5, 2),
];
const IMG8_1: &[(usize, usize)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 0),
    (0, 7),
    (7, 4),
];
const IMG8_2: &[(usize, usize)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 0),
    (0, 4),
];
const IMG8_3: &[(usize, usize)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 0),
    (3, 7),
    (7, 2),
    (7, 5),
    (5, 6),
    (6, 0),
];
const IMG8_4: &[(usize, usize)] = &[
    (0, 2),
    (2, 1),
    (1, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 0),
    (4, 7),
    (7, 3),
    (7, 0),
];
const X6: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 5), (5, 0)];
const KLEIN: &[(usize, usize)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 0),
    (5, 6),
    (6, 7),
    (7, 8),
    (8, 9),
    (9, 5),
    (0, 5),
    (1, 6),
    (2, 7),
    (3, 8),
    (4, 9),
    (1, 9),
    (2, 8),
    (3, 7),
    (4, 6),
];
const NESTED: &[(usize, usize)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 0),
    (6, 7),
    (7, 8),
    (8, 9),
    (9, 10),
    (10, 6),
    (0, 6),
    (1, 7),
    (2, 8),
    (3, 9),
    (4, 10),
    (5, 10),
];

const APPENDIX: [&[(usize, usize)]; 15] = [
    &[(0, 1), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
    &[
        (0, 1),
        (0, 5),
        (0, 6),
        (1, 2),
        (2, 3),
        (3, 4),
        (3, 6),
        (4, 5),
    ],
    &[
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 4),
        (2, 5),
        (3, 6),
        (4, 6),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 3),
        (1, 2),
        (1, 4),
        (2, 5),
        (3, 4),
        (3, 6),
        (4, 5),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 5),
        (0, 6),
        (1, 2),
        (2, 3),
        (2, 6),
        (3, 4),
        (4, 5),
    ],
    &[
        (0, 1),
        (0, 3),
        (0, 6),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 4),
        (0, 5),
        (1, 2),
        (2, 3),
        (3, 4),
        (3, 5),
        (4, 6),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 6),
        (2, 3),
        (2, 5),
        (3, 4),
        (3, 6),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 3),
        (0, 6),
        (1, 2),
        (2, 3),
        (2, 4),
        (3, 4),
        (4, 5),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 3),
        (0, 6),
        (1, 2),
        (1, 5),
        (2, 3),
        (2, 4),
        (3, 4),
        (4, 5),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 3),
        (0, 6),
        (1, 2),
        (1, 6),
        (2, 3),
        (2, 4),
        (3, 4),
        (4, 5),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 6),
        (2, 3),
        (3, 4),
        (3, 5),
        (5, 6),
    ],
    &[
        (0, 1),
        (0, 4),
        (1, 2),
        (1, 5),
        (1, 6),
        (2, 3),
        (3, 4),
        (4, 5),
        (4, 6),
    ],
    &[
        (0, 1),
        (0, 6),
        (1, 2),
        (2, 3),
        (2, 4),
        (2, 6),
        (3, 5),
        (4, 5),
    ],
    &[
        (0, 1),
        (0, 4),
        (0, 6),
        (1, 2),
        (1, 5),
        (2, 3),
        (3, 4),
        (3, 5),
        (3, 6),
    ],
];

/// Looks up a fixture by name (case-insensitive).
pub fn named_image(name: &str) -> Result<DigitalImage> {
    let upper = name.to_ascii_uppercase();
    let build = |n: usize, edges: &[(usize, usize)]| DigitalImage::new(n, edges);
    let image = match upper.as_str() {
        "C5" | "C6" | "C7" | "C8" => DigitalImage::cycle(upper[1..].parse().expect("digit")),
        "IMG7_1" => build(7, IMG7_1).map(|x| x.with_labels(["a", "b", "c", "d", "e", "f", "g"])),
        "IMG7_2" => build(7, IMG7_2),
        "IMG8_1" => build(8, IMG8_1),
        "IMG8_2" => build(8, IMG8_2),
        "IMG8_3" => build(8, IMG8_3),
        "IMG8_4" => build(8, IMG8_4),
        "X6" => build(6, X6).map(|x| x.with_labels(["x0", "x1", "x2", "x3", "x4", "x4'"])),
        "KLEIN" => build(10, KLEIN),
        "NESTED" => build(11, NESTED),
        _ => {
            let index = upper
                .strip_prefix("APPENDIX_")
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|i| (1..=15).contains(i))
                .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
            build(7, APPENDIX[index - 1])
        }
    }?;
    Ok(image)
}

/// The pentagon swap on KLEIN: inner point `i` trades places with outer `i + 5`.
pub fn klein_swap() -> Vec<usize> {
    (0..10).map(|i| (i + 5) % 10).collect()
}

/// The two lemma-filter survivors among six-point connected images.
pub fn six_point_survivors() -> [DigitalImage; 2] {
    [
        DigitalImage::cycle(6).expect("valid"),
        named_image("X6").expect("valid"),
    ]
}
