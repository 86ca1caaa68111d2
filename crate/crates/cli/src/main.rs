use std::process::ExitCode;

fn main() -> ExitCode {
    let (status, output) = sqcoh_cli::run(std::env::args());
    if status == 2 {
        eprint!("{output}");
    } else {
        print!("{output}");
    }
    ExitCode::from(status as u8)
}
