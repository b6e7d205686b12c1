//! The `diflip` command line.
//!
//! Exit codes: 0 on success, 1 when the answer is a domain "no" (nonplanar,
//! not equivalent, no immersion, not strongly 2-edge-connected), 2 on bad
//! input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::connectivity::{self, is_strongly_k_edge_connected};
use crate::digraph::{split_vertex, Digraph, Pairing, SplitChoice};
use crate::embedding::{self, FaceSet, RotationSystem, DEFAULT_ENUMERATION_BOUND};
use crate::error::Error;
use crate::format;
use crate::generate::generate_random_eulerian;
use crate::immersion::{self, PlanarityVerdict};
use crate::peripheral::two_peripheral_cycles;
use crate::whitney;

#[derive(Debug, Parser)]
#[command(
    name = "diflip",
    about = "Embeddings and Whitney flips of 2-regular digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree, connectivity and 2-edge-cut report
    Check { digraph: PathBuf },
    /// Spherical embedding, or an immersed doubled triangle
    Embed { digraph: PathBuf },
    /// Facial walks of a rotation system
    Faces {
        digraph: PathBuf,
        embedding: PathBuf,
    },
    /// Euler genus of a rotation system
    Genus {
        digraph: PathBuf,
        embedding: PathBuf,
    },
    /// Compare two embeddings (rotation or face files)
    Equiv {
        digraph: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Two peripheral cycles through an arc
    Peripheral {
        digraph: PathBuf,
        #[arg(long)]
        arc: usize,
    },
    /// Whitney flips taking one spherical embedding to another
    Flipseq {
        digraph: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Replay flip moves on a rotation system
    Apply {
        digraph: PathBuf,
        embedding: PathBuf,
        moves: PathBuf,
    },
    /// All alternating rotation systems grouped by face set
    Enumerate {
        digraph: PathBuf,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Immersion of a small target digraph
    Immerse { host: PathBuf, target: PathBuf },
    /// Split a vertex of indegree and outdegree two
    Split {
        digraph: PathBuf,
        vertex: usize,
        #[arg(value_enum)]
        pairing: PairingArg,
    },
    /// Random connected Eulerian digraph
    Gen {
        vertices: usize,
        half_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairingArg {
    Straight,
    Crossed,
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: crate::error::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> std::result::Result<Digraph, Failure> {
    in_file(path, format::parse_digraph(&read(path)?))
}

fn load_rotation(path: &Path, h: &Digraph) -> std::result::Result<RotationSystem, Failure> {
    let rotation = in_file(path, format::parse_rotation(&read(path)?, h.vertex_count()))?;
    in_file(path, embedding::check_rotation(h, &rotation))?;
    Ok(rotation)
}

/// Faces from either a `rot` file or a `face` file.
fn load_faces(path: &Path, h: &Digraph) -> std::result::Result<FaceSet, Failure> {
    let text = read(path)?;
    let is_faces = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("face"));
    if is_faces {
        in_file(path, format::parse_faces(&text))
    } else {
        let rotation = load_rotation(path, h)?;
        Ok(embedding::trace_faces(h, &rotation)?)
    }
}

/// Run with the given arguments (program name first), writing the report to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut text = String::new();
    let code = match command {
        Command::Check { digraph } => {
            let h = load_digraph(&digraph)?;
            let report = h.degree_report();
            let mut flags = Vec::new();
            if report.is_2regular {
                flags.push("2-regular");
            }
            if report.is_eulerian {
                flags.push("eulerian");
            }
            if report.is_connected {
                flags.push("connected");
            }
            if connectivity::is_strongly_connected(&h) {
                if is_strongly_k_edge_connected(&h, 2) {
                    flags.push("strongly-2ec");
                } else {
                    flags.push("strongly-connected");
                }
            }
            text.push_str(&flags.join(" "));
            text.push('\n');
            if report.is_eulerian && report.is_connected {
                for cut in connectivity::enumerate_2cuts(&h)? {
                    text.push_str(&format!(
                        "cut {} {} X={}\n",
                        cut.out_arc,
                        cut.in_arc,
                        format::write_cut_side(&cut.side)
                    ));
                }
            }
            0
        }
        Command::Embed { digraph } => {
            let h = load_digraph(&digraph)?;
            match immersion::planar_or_obstruction(&h)? {
                PlanarityVerdict::Planar(rotation) => {
                    text.push_str(&format::write_rotation(&rotation));
                    0
                }
                PlanarityVerdict::Obstruction(cert) => {
                    text.push_str("obstruction\n");
                    text.push_str(&format::write_certificate(&cert));
                    1
                }
            }
        }
        Command::Faces {
            digraph,
            embedding: file,
        } => {
            let h = load_digraph(&digraph)?;
            let rotation = load_rotation(&file, &h)?;
            text.push_str(&format::write_faces(&embedding::trace_faces(
                &h, &rotation,
            )?));
            0
        }
        Command::Genus {
            digraph,
            embedding: file,
        } => {
            let h = load_digraph(&digraph)?;
            let rotation = load_rotation(&file, &h)?;
            text.push_str(&format!(
                "genus {}\n",
                embedding::euler_genus(&h, &rotation)?
            ));
            0
        }
        Command::Equiv {
            digraph,
            first,
            second,
        } => {
            let h = load_digraph(&digraph)?;
            let a = load_faces(&first, &h)?;
            let b = load_faces(&second, &h)?;
            if embedding::equivalent(&a, &b) {
                text.push_str("equivalent\n");
                0
            } else {
                text.push_str("not-equivalent\n");
                1
            }
        }
        Command::Peripheral { digraph, arc } => {
            let h = load_digraph(&digraph)?;
            match two_peripheral_cycles(&h, arc) {
                Ok(pair) => {
                    for c in [&pair.first, &pair.second] {
                        let arcs: Vec<String> = c.arcs().iter().map(usize::to_string).collect();
                        text.push_str(&format!("cycle {}\n", arcs.join(" ")));
                    }
                    if pair.fallback_used {
                        let _ = writeln!(err, "warning: exhaustive path search was used");
                    }
                    0
                }
                Err(Error::NotStrongly2EdgeConnected { cut }) => {
                    text.push_str("not-strongly-2ec\n");
                    text.push_str(&format!(
                        "cut {} {} X={}\n",
                        cut.out_arc,
                        cut.in_arc,
                        format::write_cut_side(&cut.side)
                    ));
                    1
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Flipseq {
            digraph,
            first,
            second,
        } => {
            let h = load_digraph(&digraph)?;
            let a = load_rotation(&first, &h)?;
            let b = load_rotation(&second, &h)?;
            text.push_str(&format::write_moves(&whitney::flip_sequence(&h, &a, &b)?));
            0
        }
        Command::Apply {
            digraph,
            embedding: file,
            moves,
        } => {
            let h = load_digraph(&digraph)?;
            let rotation = load_rotation(&file, &h)?;
            let moves = in_file(&moves, format::parse_moves(&read(&moves)?))?;
            text.push_str(&format::write_rotation(&whitney::apply_moves(
                &h, &rotation, &moves,
            )?));
            0
        }
        Command::Enumerate { digraph, bound } => {
            let h = load_digraph(&digraph)?;
            if let Some(b) = bound.filter(|&b| b > DEFAULT_ENUMERATION_BOUND) {
                let _ = writeln!(
                    err,
                    "warning: bound {b} exceeds the default {DEFAULT_ENUMERATION_BOUND}; this enumerates 2^{} systems",
                    h.vertex_count()
                );
            }
            let classes =
                embedding::enumerate_embeddings(&h, bound.unwrap_or(DEFAULT_ENUMERATION_BOUND))?;
            for class in classes {
                text.push_str(&format!(
                    "class genus {} count {}\n",
                    class.genus, class.count
                ));
                text.push_str(&format::write_faces(&class.faces));
            }
            0
        }
        Command::Immerse { host, target } => {
            let h = load_digraph(&host)?;
            let t = load_digraph(&target)?;
            match immersion::immerses(&h, &t)? {
                Some(cert) => {
                    text.push_str(&format::write_certificate(&cert));
                    0
                }
                None => {
                    text.push_str("none\n");
                    1
                }
            }
        }
        Command::Split {
            digraph,
            vertex,
            pairing,
        } => {
            let h = load_digraph(&digraph)?;
            let pairing = match pairing {
                PairingArg::Straight => Pairing::Straight,
                PairingArg::Crossed => Pairing::Crossed,
            };
            let split = split_vertex(&h, SplitChoice::new(vertex, pairing))?;
            text.push_str(&format::write_digraph(&split.digraph));
            0
        }
        Command::Gen {
            vertices,
            half_degree,
            seed,
        } => {
            if vertices == 0 || half_degree == 0 {
                return Err(Failure::Input(
                    "vertex count and half-degree must be at least 1".into(),
                ));
            }
            text.push_str(&format::write_digraph(&generate_random_eulerian(
                vertices,
                half_degree,
                seed,
            )));
            0
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Input(format!("writing output: {e}")))?;
    Ok(code)
}
