//! Scheme sources: a tiny text format for relation tables, constructors
//! (thin schemes from groups, orbital schemes of permutation groups,
//! polygon schemes), and a named catalog of small instances.

use crate::scheme::{validate_scheme, Scheme};
use crate::verify::Counterexample;
use std::collections::VecDeque;
use thiserror::Error;

/// Parse error for the relation-table text format, with 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// Parse a relation table from text.
///
/// Format: one row per nonempty line, entries are nonnegative integers
/// separated by whitespace, `#` starts a comment that runs to end of line.
pub fn parse_scheme_file(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut row = Vec::new();
        let mut chars = content.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let token = &content[start..end];
            let value: usize = token.parse().map_err(|_| ParseError {
                line,
                col: start + 1,
                message: format!("expected a nonnegative integer, found {token:?}"),
            })?;
            row.push(value);
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Err(ParseError {
            line: 1,
            col: 1,
            message: "no table rows found".to_string(),
        });
    }
    Ok(rows)
}

/// Render a scheme back to the text format (inverse of the parser).
pub fn render_scheme(s: &Scheme) -> String {
    let mut out = String::new();
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// A finite group given by its multiplication table, with the identity at
/// index 0.  Construction validates the group axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    mul: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn new(mul: Vec<Vec<usize>>) -> Result<GroupTable, Counterexample> {
        let n = mul.len();
        let fail = |w: String| Err(Counterexample::new("group table", w));
        if n == 0 {
            return fail("empty table".to_string());
        }
        for (x, row) in mul.iter().enumerate() {
            if row.len() != n {
                return fail(format!("row {x} has {} entries, expected {n}", row.len()));
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= n {
                    return fail(format!("entry at ({x},{y}) is {v}, out of range"));
                }
            }
        }
        for x in 0..n {
            if mul[0][x] != x || mul[x][0] != x {
                return fail(format!("element 0 is not an identity at {x}"));
            }
        }
        // Each row and column is a permutation.
        for x in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for y in 0..n {
                if seen_row[mul[x][y]] {
                    return fail(format!("row {x} repeats element {}", mul[x][y]));
                }
                seen_row[mul[x][y]] = true;
                if seen_col[mul[y][x]] {
                    return fail(format!("column {x} repeats element {}", mul[y][x]));
                }
                seen_col[mul[y][x]] = true;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]] {
                        return fail(format!("associativity fails at ({x},{y},{z})"));
                    }
                }
            }
        }
        Ok(GroupTable { n, mul })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.n).find(|&y| self.mul[x][y] == 0).expect("group element has an inverse")
    }
}

/// Cyclic group of order n.
pub fn cyclic_group(n: usize) -> GroupTable {
    let mul = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
    GroupTable::new(mul).expect("cyclic table is a group")
}

/// Klein four-group (elementwise xor on two bits).
pub fn klein_group() -> GroupTable {
    let mul = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
    GroupTable::new(mul).expect("xor table is a group")
}

/// Symmetric group on three letters, elements numbered with the identity
/// first: e, (01), (02), (12), (012), (021).
pub fn symmetric3() -> GroupTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] {
        // (a then b) applied to i.
        [b[a[0]], b[a[1]], b[a[2]]]
    };
    let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).expect("closed");
    let mul = (0..6)
        .map(|x| (0..6).map(|y| index_of(&compose(&perms[x], &perms[y]))).collect())
        .collect();
    GroupTable::new(mul).expect("composition table is a group")
}

/// Thin scheme of a group G: points are the elements, and (x, y) lies in
/// relation g exactly when x * g = y.  All valencies are 1.
pub fn thin_from_group(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| (0..n).find(|&e| g.mul(x, e) == y).expect("rows are permutations"))
                .collect()
        })
        .collect()
}

/// Orbital scheme of a transitive permutation group: relations are the
/// orbits of the generated group acting on ordered pairs.  The diagonal
/// orbit gets index 0; the rest are numbered by first appearance in
/// row-major order.
pub fn schurian_from_permgroup(
    n: usize,
    generators: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>, Counterexample> {
    let fail = |w: String| Err(Counterexample::new("orbital scheme", w));
    if n == 0 {
        return fail("empty point set".to_string());
    }
    if generators.is_empty() {
        return fail("no generators".to_string());
    }
    for (gi, g) in generators.iter().enumerate() {
        if g.len() != n {
            return fail(format!("generator {gi} has length {}, expected {n}", g.len()));
        }
        let mut seen = vec![false; n];
        for &img in g {
            if img >= n || seen[img] {
                return fail(format!("generator {gi} is not a permutation of 0..{n}"));
            }
            seen[img] = true;
        }
    }
    // Transitivity on points.
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            if !reached[g[x]] {
                reached[g[x]] = true;
                queue.push_back(g[x]);
            }
        }
    }
    if let Some(x) = reached.iter().position(|&r| !r) {
        return fail(format!("group is not transitive: point {x} is not in the orbit of 0"));
    }
    // Orbits on ordered pairs, labeled by first appearance.  Generators are
    // invertible on a finite set, so forward closure suffices.
    let mut label = vec![usize::MAX; n * n];
    let mut next = 0;
    for x in 0..n {
        for y in 0..n {
            if label[x * n + y] != usize::MAX {
                continue;
            }
            let this = next;
            next += 1;
            label[x * n + y] = this;
            let mut queue = VecDeque::from([(x, y)]);
            while let Some((a, b)) = queue.pop_front() {
                for g in generators {
                    let (ga, gb) = (g[a], g[b]);
                    if label[ga * n + gb] == usize::MAX {
                        label[ga * n + gb] = this;
                        queue.push_back((ga, gb));
                    } else if label[ga * n + gb] != this {
                        return fail(format!(
                            "orbit labeling clashed at ({ga},{gb}); this is a bug"
                        ));
                    }
                }
            }
        }
    }
    Ok((0..n).map(|x| (0..n).map(|y| label[x * n + y]).collect()).collect())
}

/// Polygon scheme: points on an n-cycle, related by their cyclic distance.
pub fn cycle_scheme(n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 3, "need at least a triangle");
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let fwd = (y + n - x) % n;
                    fwd.min(n - fwd)
                })
                .collect()
        })
        .collect()
}

/// A named instance from the built-in catalog.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
}

const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "trivial",
        description: "one point, one relation",
    },
    CatalogEntry {
        name: "thin-C2",
        description: "thin scheme of the cyclic group of order 2",
    },
    CatalogEntry {
        name: "thin-C3",
        description: "thin scheme of the cyclic group of order 3",
    },
    CatalogEntry {
        name: "thin-Klein",
        description: "thin scheme of the Klein four-group",
    },
    CatalogEntry {
        name: "thin-S3",
        description: "thin scheme of the symmetric group on 3 letters",
    },
    CatalogEntry {
        name: "cycle-4",
        description: "distance scheme of the 4-cycle (quasi-thin)",
    },
    CatalogEntry {
        name: "cycle-5",
        description: "distance scheme of the 5-cycle (quasi-thin)",
    },
    CatalogEntry {
        name: "cycle-6",
        description: "distance scheme of the 6-cycle (quasi-thin)",
    },
    CatalogEntry {
        name: "cycle-7",
        description: "distance scheme of the 7-cycle (quasi-thin)",
    },
    CatalogEntry {
        name: "cycle-8",
        description: "distance scheme of the 8-cycle (quasi-thin)",
    },
    CatalogEntry {
        name: "affine-8",
        description: "orbital scheme of x -> ux+v (u = 1 or 5) on Z/8 (quasi-thin, non-symmetric)",
    },
];

/// All built-in instances.
pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

/// Relation table of a named catalog instance, if the name is known.
pub fn catalog_table(name: &str) -> Option<Vec<Vec<usize>>> {
    let table = match name {
        "trivial" => vec![vec![0]],
        "thin-C2" => thin_from_group(&cyclic_group(2)),
        "thin-C3" => thin_from_group(&cyclic_group(3)),
        "thin-Klein" => thin_from_group(&klein_group()),
        "thin-S3" => thin_from_group(&symmetric3()),
        "cycle-4" => cycle_scheme(4),
        "cycle-5" => cycle_scheme(5),
        "cycle-6" => cycle_scheme(6),
        "cycle-7" => cycle_scheme(7),
        "cycle-8" => cycle_scheme(8),
        "affine-8" => {
            let shift: Vec<usize> = (0..8).map(|x| (x + 1) % 8).collect();
            let times5: Vec<usize> = (0..8).map(|x| (5 * x) % 8).collect();
            schurian_from_permgroup(8, &[shift, times5]).expect("affine maps act transitively")
        }
        _ => return None,
    };
    Some(table)
}

/// Validated scheme for a named catalog instance.
pub fn catalog_scheme(name: &str) -> Option<Scheme> {
    let table = catalog_table(name)?;
    Some(validate_scheme(&table).expect("catalog instances satisfy the scheme axioms"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{classify, intersection_numbers, valencies, SchemeKind};

    #[test]
    fn parser_handles_comments_and_blank_lines() {
        let text = "# the 4-cycle\n0 1 2 1\n1 0 1 2   # a row\n\n2 1 0 1\n1 2 1 0\n";
        let rows = parse_scheme_file(text).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[1], vec![1, 0, 1, 2]);
    }

    #[test]
    fn parser_reports_position_of_bad_token() {
        let err = parse_scheme_file("0 1\n1 x\n").unwrap_err();
        assert_eq!((err.line, err.col), (2, 3));
        assert!(err.message.contains("\"x\""), "message was {:?}", err.message);
    }

    #[test]
    fn parser_rejects_empty_input() {
        assert!(parse_scheme_file("# nothing here\n").is_err());
    }

    #[test]
    fn render_round_trips() {
        let s = catalog_scheme("cycle-5").unwrap();
        let text = render_scheme(&s);
        let rows = parse_scheme_file(&text).unwrap();
        assert_eq!(rows, s.rows());
    }

    #[test]
    fn group_validation_accepts_cyclic() {
        let g = cyclic_group(4);
        assert_eq!(g.order(), 4);
        assert_eq!(g.inverse(1), 3);
    }

    #[test]
    fn group_validation_rejects_nonassociative_loop() {
        // A Latin square with identity that is not a group.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let err = GroupTable::new(loop5).unwrap_err();
        assert!(err.to_string().contains("associativity"), "got {err}");
    }

    #[test]
    fn thin_scheme_of_c3() {
        let table = thin_from_group(&cyclic_group(3));
        assert_eq!(table, vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]);
        let s = validate_scheme(&table).unwrap();
        let t = intersection_numbers(&s).unwrap();
        let v = valencies(&s, &t).unwrap();
        assert_eq!(classify(&v).kind, SchemeKind::Thin);
    }

    #[test]
    fn orbital_scheme_of_dihedral_action_is_the_polygon_scheme() {
        let rot: Vec<usize> = (0..6).map(|x| (x + 1) % 6).collect();
        let flip: Vec<usize> = (0..6).map(|x| (6 - x) % 6).collect();
        let table = schurian_from_permgroup(6, &[rot, flip]).unwrap();
        assert_eq!(table, cycle_scheme(6));
    }

    #[test]
    fn orbital_scheme_requires_transitivity() {
        let id: Vec<usize> = vec![0, 1];
        let err = schurian_from_permgroup(2, &[id]).unwrap_err();
        assert!(err.to_string().contains("transitive"), "got {err}");
    }

    #[test]
    fn orbital_scheme_rejects_non_permutation() {
        let bad: Vec<usize> = vec![0, 0, 1];
        assert!(schurian_from_permgroup(3, &[bad]).is_err());
    }

    #[test]
    fn affine8_is_quasi_thin_and_non_symmetric() {
        let s = catalog_scheme("affine-8").unwrap();
        assert_eq!((s.n(), s.d()), (8, 5));
        let t = intersection_numbers(&s).unwrap();
        let v = valencies(&s, &t).unwrap();
        let mut ks = v.all().to_vec();
        ks.sort();
        assert_eq!(ks, vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(classify(&v).kind, SchemeKind::QuasiThin);
        let asym = (0..=s.d()).any(|i| v.inv(i) != i);
        assert!(asym, "some relation should differ from its transpose");
        assert_eq!(v.inv(1), 3);
    }

    #[test]
    fn every_catalog_entry_validates() {
        let mut names = std::collections::BTreeSet::new();
        for entry in catalog() {
            assert!(names.insert(entry.name), "duplicate name {}", entry.name);
            let table = catalog_table(entry.name)
                .unwrap_or_else(|| panic!("{} has no table", entry.name));
            validate_scheme(&table)
                .unwrap_or_else(|v| panic!("{} fails validation: {v:?}", entry.name));
        }
        assert!(catalog_table("no-such-scheme").is_none());
    }
}
