use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rdh3d::bench::{self, BenchConfig};
use rdh3d::cipher::{KeyMaterial, Role};
use rdh3d::cli::{self, AnalysisDocument};
use rdh3d::codec::{read_container, write_container};
use rdh3d::mesh_io::{read_mesh_file, write_mesh, Mesh, MeshFormat};
use rdh3d::metrics::SnrForm;
use rdh3d::{Error, Result};

#[derive(Parser)]
#[command(
    name = "rdh3d",
    version,
    about = "Separable reversible data hiding in encrypted triangle meshes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Off,
    Obj,
    Ply,
}

impl From<Format> for MeshFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Off => MeshFormat::Off,
            Format::Obj => MeshFormat::Obj,
            Format::Ply => MeshFormat::Ply,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SnrArg {
    Conventional,
    Printed,
}

#[derive(Subcommand)]
enum Command {
    /// Partition, predict and report the capacity curve as JSON
    Analyze {
        mesh: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Scale the mesh by a power of ten into (-1, 1) first
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quantize and encrypt a mesh into an unmarked container
    Encrypt {
        mesh: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        normalize: bool,
        #[arg(long, env = "RDH3D_KE_PASS", hide_env_values = true)]
        ke_pass: String,
        #[arg(long)]
        out: PathBuf,
        /// Also write the encrypted integer coordinates as OFF
        #[arg(long)]
        export_off: Option<PathBuf>,
    },
    /// Embed a payload into an encrypted container
    Embed {
        container: PathBuf,
        #[arg(long)]
        report: PathBuf,
        /// Payload file; random bits filling the capacity when absent
        #[arg(long)]
        payload: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        payload_seed: u64,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, env = "RDH3D_KW_PASS", hide_env_values = true)]
        kw_pass: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        export_off: Option<PathBuf>,
    },
    /// Extract the payload with the data hiding key
    Extract {
        container: PathBuf,
        #[arg(long, env = "RDH3D_KW_PASS", hide_env_values = true)]
        kw_pass: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover the original mesh with the encryption key
    Recover {
        container: PathBuf,
        #[arg(long, env = "RDH3D_KE_PASS", hide_env_values = true)]
        ke_pass: String,
        #[arg(long, value_enum, default_value = "off")]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
    /// Hausdorff distance, SNR and embedding rate between two meshes
    Metrics {
        original: PathBuf,
        modified: PathBuf,
        /// Container whose payload length gives the embedding rate
        #[arg(long)]
        container: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "conventional")]
        snr_form: SnrArg,
        /// Use the kd-tree Hausdorff path
        #[arg(long)]
        indexed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a corpus directory and write one CSV row per (mesh, m, n)
    Bench {
        corpus: PathBuf,
        /// "4", "2-9" or "2,4,6"
        #[arg(long, default_value = "4")]
        m: String,
        /// Same syntax as --m; capacity-optimal n when absent
        #[arg(long)]
        n: Option<String>,
        #[arg(long, env = "RDH3D_KE_PASS", hide_env_values = true, default_value = "bench-ke")]
        ke_pass: String,
        #[arg(long, env = "RDH3D_KW_PASS", hide_env_values = true, default_value = "bench-kw")]
        kw_pass: String,
        #[arg(long)]
        indexed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_mesh(path: &Path, format: Option<Format>, normalize: bool) -> Result<Mesh> {
    let mesh = read_mesh_file(path, format.map(Into::into))?;
    Ok(if normalize {
        mesh.scaled_into_unit_cube().0
    } else {
        mesh
    })
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze {
            mesh,
            m,
            n,
            format,
            normalize,
            out,
        } => {
            let doc = cli::cmd_analyze(&load_mesh(&mesh, format, normalize)?, m, n)?;
            let mut json = serde_json::to_vec_pretty(&doc)?;
            json.push(b'\n');
            emit(out.as_deref(), &json)
        }
        Command::Encrypt {
            mesh,
            m,
            format,
            normalize,
            ke_pass,
            out,
            export_off,
        } => {
            let ke = KeyMaterial::from_passphrase(&ke_pass, Role::Encryption);
            let c = cli::cmd_encrypt(&load_mesh(&mesh, format, normalize)?, m, &ke)?;
            fs::write(&out, write_container(&c))?;
            if let Some(path) = export_off {
                fs::write(path, write_mesh(&c.to_quantized().to_integer_mesh(), MeshFormat::Off))?;
            }
            Ok(())
        }
        Command::Embed {
            container,
            report,
            payload,
            payload_seed,
            n,
            kw_pass,
            out,
            export_off,
        } => {
            let kw = KeyMaterial::from_passphrase(&kw_pass, Role::Hiding);
            let c = read_container(&fs::read(&container)?)?;
            let doc: AnalysisDocument = serde_json::from_slice(&fs::read(&report)?)?;
            let bits = payload
                .map(|p| fs::read(p).map(|b| cli::bytes_to_bits(&b)))
                .transpose()?;
            let marked = cli::cmd_embed(&c, &doc, bits.as_deref(), n, &kw, payload_seed)?;
            fs::write(&out, write_container(&marked))?;
            if let Some(path) = export_off {
                fs::write(
                    path,
                    write_mesh(&marked.to_quantized().to_integer_mesh(), MeshFormat::Off),
                )?;
            }
            eprintln!("embedded {} bits at n={}", marked.payload_bits, marked.n);
            Ok(())
        }
        Command::Extract {
            container,
            kw_pass,
            out,
        } => {
            let kw = KeyMaterial::from_passphrase(&kw_pass, Role::Hiding);
            let bits = cli::cmd_extract(&read_container(&fs::read(&container)?)?, &kw)?;
            fs::write(&out, cli::bits_to_bytes(&bits))?;
            eprintln!("extracted {} bits", bits.len());
            Ok(())
        }
        Command::Recover {
            container,
            ke_pass,
            format,
            out,
        } => {
            let ke = KeyMaterial::from_passphrase(&ke_pass, Role::Encryption);
            let mesh = cli::cmd_recover(&read_container(&fs::read(&container)?)?, &ke)?;
            fs::write(&out, write_mesh(&mesh, format.into()))?;
            Ok(())
        }
        Command::Metrics {
            original,
            modified,
            container,
            snr_form,
            indexed,
            out,
        } => {
            let a = read_mesh_file(&original, None)?;
            let b = read_mesh_file(&modified, None)?;
            let bits = match container {
                Some(path) => read_container(&fs::read(path)?)?.payload_bits,
                None => 0,
            };
            let form = match snr_form {
                SnrArg::Conventional => SnrForm::Conventional,
                SnrArg::Printed => SnrForm::AsPrinted,
            };
            let report = cli::cmd_metrics(&a, &b, bits, form, indexed)?;
            let mut json = serde_json::to_vec_pretty(&report)?;
            json.push(b'\n');
            emit(out.as_deref(), &json)
        }
        Command::Bench {
            corpus,
            m,
            n,
            ke_pass,
            kw_pass,
            indexed,
            out,
        } => {
            let m_values = cli::parse_range(&m)?;
            for &m in &m_values {
                rdh3d::quantize::check_precision(m)?;
            }
            let n_values = n.as_deref().map(cli::parse_range).transpose()?;
            let mut cfg = BenchConfig::new(&ke_pass, &kw_pass);
            cfg.indexed_hausdorff = indexed;
            let outcome = bench::run_bench(&corpus, &m_values, n_values.as_deref(), &cfg)?;
            for (what, why) in &outcome.failures {
                eprintln!("warning: {what}: {why}");
            }
            let mut buf = Vec::new();
            bench::write_csv(&outcome.rows, &mut buf)?;
            emit(out.as_deref(), &buf)?;
            for (m, bpv) in bench::mean_bpv_by_m(&outcome.rows) {
                eprintln!("m={m}: mean {bpv:.3} bpv");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    e.exit_code() as u8
}
