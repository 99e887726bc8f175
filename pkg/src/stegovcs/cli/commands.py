"""Command-line front end.

Exit codes: 0 success, 1 scheme errors (capacity, bands, pairs, headers,
non-binary covers, failed round trip), 2 I/O and usage errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from stegovcs.analysis.report import (
    band_gap_report,
    guess_probability,
    histogram,
    histogram_csv,
    render_key_values,
    render_text,
)
from stegovcs.config.log import configure_logging
from stegovcs.config.settings import settings
from stegovcs.errors import DomainError, StegoVcsError
from stegovcs.imaging.images import GrayImage
from stegovcs.imaging.pnm import (
    PnmFormat,
    decode_pnm,
    encode_pnm,
    is_pnm,
    read_pnm,
    validate_binary,
    write_pnm,
)
from stegovcs.scheme.decode import decode_shares, stack_or, visual_decode
from stegovcs.scheme.embed import PIXELS_PER_BYTE, embed
from stegovcs.scheme.extract import extract_payload, restore_cover
from stegovcs.scheme.payload import HEADER_SIZE, Payload, PayloadKind
from stegovcs.scheme.shares import generate_shares, share_table
from stegovcs.storage.manifest import (
    ShareManifest,
    load_manifest,
    save_manifest,
    sha256_hex,
    verify_shares,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2
MAX_SEED = (1 << 64) - 1


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}")
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must lie in 0..{MAX_SEED}")
    return value


def _workers(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("workers must be at least 1")
    return value


def _load_secret(path: str, secret_type: Optional[str]) -> Payload:
    data = Path(path).read_bytes()
    if secret_type is None:
        secret_type = "img" if is_pnm(data) else "msg"
    if secret_type == "img":
        return Payload.from_image(decode_pnm(data))
    return Payload.from_message(data)


def _image_format(path: str, img: GrayImage) -> PnmFormat:
    if Path(path).suffix.lower() == ".pbm":
        validate_binary(img)
        return PnmFormat(settings.COVER_FORMAT)
    return PnmFormat(settings.GRAY_FORMAT)


def cmd_embed(args: argparse.Namespace) -> int:
    cover = validate_binary(read_pnm(args.cover))
    payload = _load_secret(args.secret, args.secret_type)
    stego = embed(cover, payload)
    write_pnm(args.out, stego, settings.GRAY_FORMAT)
    used = PIXELS_PER_BYTE * (HEADER_SIZE + len(payload.body))
    print(
        f"embedded {payload.kind.value} {payload.width}x{payload.height}: "
        f"{used}/{cover.size} pixels"
    )
    return EXIT_OK


def cmd_shares(args: argparse.Namespace) -> int:
    stego_bytes = Path(args.input).read_bytes()
    stego = decode_pnm(stego_bytes)
    share1, share2 = generate_shares(stego, args.seed, args.workers)
    data1 = encode_pnm(share1, settings.GRAY_FORMAT)
    data2 = encode_pnm(share2, settings.GRAY_FORMAT)
    Path(args.out1).write_bytes(data1)
    Path(args.out2).write_bytes(data2)
    if args.manifest:
        save_manifest(
            args.manifest,
            ShareManifest(
                seed=args.seed,
                width=stego.width,
                height=stego.height,
                stego_sha256=sha256_hex(stego_bytes),
                share1_sha256=sha256_hex(data1),
                share2_sha256=sha256_hex(data2),
            ),
        )
    print(f"seed={args.seed}")
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    data1 = Path(args.share1).read_bytes()
    data2 = Path(args.share2).read_bytes()
    if args.manifest:
        verify_shares(load_manifest(args.manifest), data1, data2)
    stego = decode_shares(decode_pnm(data1), decode_pnm(data2))
    write_pnm(args.out, stego, settings.GRAY_FORMAT)
    return EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    stego = read_pnm(args.input)
    cover = restore_cover(stego)
    payload = extract_payload(stego)
    if payload.kind is PayloadKind.MESSAGE:
        Path(args.out_secret).write_bytes(payload.body)
    else:
        secret = payload.to_image()
        write_pnm(args.out_secret, secret, _image_format(args.out_secret, secret))
    write_pnm(args.out_cover, cover, settings.COVER_FORMAT)
    print(f"extracted {payload.kind.value} {payload.width}x{payload.height}")
    return EXIT_OK


def cmd_stack(args: argparse.Namespace) -> int:
    overlay = stack_or(read_pnm(args.share1), read_pnm(args.share2))
    write_pnm(args.out, overlay, settings.GRAY_FORMAT)
    if args.visual:
        write_pnm(args.visual, visual_decode(overlay), settings.COVER_FORMAT)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    img = read_pnm(args.input)
    hist = histogram(img)
    gap = band_gap_report(img) if hist.out_of_band == 0 else None
    render = render_key_values if args.format == "kv" else render_text
    sys.stdout.write(render(hist, gap, guess_probability()))
    if args.csv:
        Path(args.csv).write_text(histogram_csv(hist))
    if args.plot:
        from stegovcs.analysis.plots import plot_histograms

        cover = read_pnm(args.cover) if args.cover else None
        plot_histograms(img, args.plot, cover=cover)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    for n, row in enumerate(share_table(), start=1):
        if args.format == "kv":
            print(
                f"row.{n}={row.value},{row.pattern.value},"
                f"{row.pair1[0]} {row.pair1[1]},{row.pair2[0]} {row.pair2[1]}"
            )
        else:
            print(
                f"{row.value:>3}  {row.pattern.value:<5}  "
                f"{row.pair1[0]:>3} {row.pair1[1]:>3}  |  {row.pair2[0]:>3} {row.pair2[1]:>3}"
            )
    return EXIT_OK


def cmd_roundtrip(args: argparse.Namespace) -> int:
    from stegovcs.core.pipeline import StegoVcsPipeline

    cover = read_pnm(args.cover)
    payload = _load_secret(args.secret, args.secret_type)
    print(f"seed={args.seed}")
    try:
        result = StegoVcsPipeline(workers=args.workers).run_roundtrip(cover, payload, args.seed)
    except DomainError as exc:
        print(f"FAIL: {type(exc).__name__}: {exc}")
        return EXIT_DOMAIN
    if result.verified:
        print("PASS")
        return EXIT_OK
    print("FAIL: " + "; ".join(result.failures))
    return EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Hide a secret in a binary cover and split it into two visual shares",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        default=settings.LOG_LEVEL.upper(),
    )
    parser.add_argument("--workers", type=_workers, default=settings.WORKERS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed a secret message or image into a binary cover")
    p.add_argument("--cover", required=True)
    p.add_argument("--secret", required=True)
    p.add_argument("--secret-type", choices=("msg", "img"))
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_embed)

    p = sub.add_parser("shares", help="split a stego image into two shares")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--out1", required=True)
    p.add_argument("--out2", required=True)
    p.add_argument("--manifest")
    p.set_defaults(handler=cmd_shares)

    p = sub.add_parser("decode", help="fuse two shares back into the stego image")
    p.add_argument("--share1", required=True)
    p.add_argument("--share2", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--manifest")
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("extract", help="recover the secret and the cover from a stego image")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out-secret", required=True)
    p.add_argument("--out-cover", required=True)
    p.set_defaults(handler=cmd_extract)

    p = sub.add_parser("stack", help="OR-stack two shares as transparencies would")
    p.add_argument("--share1", required=True)
    p.add_argument("--share2", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--visual")
    p.set_defaults(handler=cmd_stack)

    p = sub.add_parser("analyze", help="histogram, band gap and guess-probability report")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--cover")
    p.add_argument("--csv")
    p.add_argument("--plot")
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("table", help="print the full share generation table")
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("roundtrip", help="run the whole pipeline and verify the identity")
    p.add_argument("--cover", required=True)
    p.add_argument("--secret", required=True)
    p.add_argument("--secret-type", choices=("msg", "img"))
    p.add_argument("--seed", type=_seed, required=True)
    p.set_defaults(handler=cmd_roundtrip)

    return parser


def run_cli(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_IO

    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except StegoVcsError as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
