"""Command-line client for the projflip service.

The CLI never computes geometry itself: every subcommand posts to the
HTTP API, by default against an in-process application instance, or
against a remote server via --url.  Reports are printed as JSON with
sorted keys.  Exit codes: 0 success, 1 verification failure, 2 input
error.
"""

from __future__ import annotations

import json
import sys

import click
import httpx


def _client(url):
    if url:
        return httpx.Client(base_url=url, timeout=600.0)
    # default: drive the ASGI app in-process, no server required
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        from fastapi.testclient import TestClient
    from .service import app
    return TestClient(app)


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(json.dumps({"error": "UsageError", "detail": str(exc)},
                              sort_keys=True))
        sys.exit(2)


def _post(ctx, path, payload):
    with _client(ctx.obj["url"]) as client:
        resp = client.post(path, json=payload)
    try:
        body = resp.json()
    except json.JSONDecodeError:
        body = {"error": "ServiceError", "detail": resp.text}
    if resp.status_code != 200:
        click.echo(json.dumps(body, sort_keys=True))
        sys.exit(2)
    return body


@click.group()
@click.option("--url", default=None,
              help="Base URL of a running service; default is in-process.")
@click.pass_context
def main(ctx, url):
    ctx.ensure_object(dict)
    ctx.obj["url"] = url


@main.command()
@click.option("--lines", "lines_path", required=True, type=click.Path())
@click.pass_context
def arrange(ctx, lines_path):
    """Census and triangle list of a generic line arrangement."""
    body = _post(ctx, "/arrange", _load_json(lines_path))
    click.echo(json.dumps(body, sort_keys=True))


@main.command()
@click.option("--lines", "lines_path", required=True, type=click.Path())
@click.pass_context
def color(ctx, lines_path):
    """Checkerboard coloring of the arrangement's regions."""
    body = _post(ctx, "/color", _load_json(lines_path))
    click.echo(json.dumps(body, sort_keys=True))


@main.command()
@click.option("--lines", "lines_path", required=True, type=click.Path())
@click.pass_context
def dual(ctx, lines_path):
    """Bipartite quadrangulation dual to the arrangement."""
    body = _post(ctx, "/dual", _load_json(lines_path))
    click.echo(json.dumps(body, sort_keys=True))


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--site", required=True,
              help="Dot id, or comma-separated line triple i,j,k.")
@click.option("--direction", required=True,
              type=click.Choice(["point_to_line", "line_to_point"]))
@click.pass_context
def flip(ctx, config_path, site, direction):
    """Apply a single Desargues flip to a configuration."""
    raw = site.split(",")
    parsed = [int(x) for x in raw] if len(raw) == 3 else int(raw[0])
    body = _post(ctx, "/flip", {"configuration": _load_json(config_path),
                                "site": parsed, "direction": direction})
    click.echo(json.dumps(body, sort_keys=True))


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--word", "word_path", required=True, type=click.Path())
@click.pass_context
def word(ctx, config_path, word_path):
    """Apply a flip word to a configuration."""
    body = _post(ctx, "/word", {"configuration": _load_json(config_path),
                                "word": _load_json(word_path)})
    click.echo(json.dumps(body, sort_keys=True))


@main.command()
@click.option("--motion", "motion_path", required=True, type=click.Path())
@click.pass_context
def simulate(ctx, motion_path):
    """Event word and snapshot check of a motion script."""
    body = _post(ctx, "/simulate", {"script": _load_json(motion_path)})
    click.echo(json.dumps(body, sort_keys=True))


@main.command()
@click.option("--suite", "suite_path", default=None, type=click.Path(),
              help="Manifest JSON; defaults to the shipped suite.")
@click.pass_context
def verify(ctx, suite_path):
    """Run the verification suite and report per-check results."""
    manifest = _load_json(suite_path) if suite_path else None
    body = _post(ctx, "/verify", {"manifest": manifest})
    click.echo(json.dumps(body, sort_keys=True))
    if not body.get("report", {}).get("passed", False):
        sys.exit(1)


@main.command()
@click.option("--lines", "lines_path", required=True, type=click.Path())
@click.option("--chart", default="auto",
              type=click.Choice(["auto", "x", "y", "z"]))
@click.option("--svg-out", default=None, type=click.Path())
@click.option("--dot-out", default=None, type=click.Path())
@click.pass_context
def render(ctx, lines_path, chart, svg_out, dot_out):
    """Render the arrangement as SVG and its dual as DOT."""
    payload = _load_json(lines_path)
    payload["chart"] = chart
    body = _post(ctx, "/render", payload)
    if svg_out:
        with open(svg_out, "w", encoding="utf-8") as fh:
            fh.write(body["svg"])
    if dot_out:
        with open(dot_out, "w", encoding="utf-8") as fh:
            fh.write(body["dual_dot"])
    if not svg_out and not dot_out:
        click.echo(json.dumps(body, sort_keys=True))
    else:
        click.echo(json.dumps({"svg": bool(svg_out), "dual_dot": bool(dot_out)},
                              sort_keys=True))


if __name__ == "__main__":
    main()
