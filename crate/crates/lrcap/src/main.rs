fn main() {
    // Die quietly when the reader closes the pipe (`lrcap verify | head`),
    // like other line-oriented tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    env_logger::init();
    std::process::exit(lrcap::cli::run());
}
