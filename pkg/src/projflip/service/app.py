"""FastAPI service wrapping the exact-geometry core.

Every endpoint is a thin translation layer: parse the JSON dialect,
call the core, serialize the result.  Domain errors map to 422 with the
error class name; malformed input maps to 400.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..arrangement import (build_arrangement, cell_census, checkerboard_color,
                           dual_quadrangulation, triangular_regions)
from ..coherence import Configuration, validate_configuration
from ..errors import ProjflipError, UsageError
from ..motion import event_word, track_arrangement, track_consistent
from ..render import render_dual_dot, render_svg
from ..serialize import (config_from_json, config_to_json, dump_rational,
                         lines_from_json, script_from_json, word_from_json,
                         word_to_json)
from ..suite import default_manifest, run_suite
from ..words import FlipEvent, apply_event, apply_word
from .schemas import (CensusResponse, ColoringResponse, ConfigurationResponse,
                      DualResponse, FlipRequest, LineSetRequest,
                      RenderRequest, RenderResponse, SimulateRequest,
                      SimulateResponse, VerifyRequest, VerifyResponse,
                      WordRequest)


def create_app() -> FastAPI:
    app = FastAPI(title="projflip", version="1.0.0")

    @app.exception_handler(ProjflipError)
    async def _domain_error(request: Request, exc: ProjflipError):
        status = 400 if isinstance(exc, UsageError) else 422
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "detail": str(exc)})

    @app.post("/arrange", response_model=CensusResponse)
    def arrange(req: LineSetRequest):
        lines = lines_from_json(req.model_dump())
        arr = build_arrangement(lines)
        v, e, f, euler = cell_census(arr)
        return CensusResponse(n=arr.n, vertices=v, arcs=e, regions=f,
                              euler=euler, triangles=triangular_regions(arr))

    @app.post("/color", response_model=ColoringResponse)
    def color(req: LineSetRequest):
        arr = build_arrangement(lines_from_json(req.model_dump()))
        col = checkerboard_color(arr)
        return ColoringResponse(base_region=col.base_region,
                                colors=dict(enumerate(col.colors)))

    @app.post("/dual", response_model=DualResponse)
    def dual(req: LineSetRequest):
        arr = build_arrangement(lines_from_json(req.model_dump()))
        d = dual_quadrangulation(arr, checkerboard_color(arr))
        return DualResponse(
            dots=d.colors,
            edges=[list(e) for e in d.edges],
            faces=[{"corners": list(f.corners), "label": list(f.label)}
                   for f in d.faces])

    @app.post("/flip", response_model=ConfigurationResponse)
    def flip(req: FlipRequest):
        config = config_from_json(req.configuration)
        site = tuple(req.site) if isinstance(req.site, list) else req.site
        out = apply_event(config, FlipEvent(site, req.direction))
        return _config_response(out)

    @app.post("/word", response_model=ConfigurationResponse)
    def word(req: WordRequest):
        config = config_from_json(req.configuration)
        out = apply_word(config, word_from_json(req.word))
        return _config_response(out)

    @app.post("/simulate", response_model=SimulateResponse)
    def simulate(req: SimulateRequest):
        ms = script_from_json(req.script)
        track = track_arrangement(ms)
        events = []
        for ev, fe in zip(track.timeline.events, track.word.events):
            lo, hi = ev.root.lo, ev.root.hi
            events.append({
                "triple": list(ev.triple),
                "direction": fe.direction,
                "time": dump_rational(ev.root.exact)
                if ev.root.exact is not None else None,
                "interval": [dump_rational(lo), dump_rational(hi)],
            })
        consistent = (all(s.dual is not None for s in track.snapshots)
                      and track_consistent(track))
        return SimulateResponse(
            events=events,
            word=word_to_json(track.word),
            samples=[dump_rational(t) for t in track.timeline.samples],
            consistent=consistent)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest):
        manifest = req.manifest or default_manifest()
        return VerifyResponse(report=run_suite(manifest))

    @app.post("/render", response_model=RenderResponse)
    def render(req: RenderRequest):
        arr = build_arrangement(lines_from_json({"lines": req.lines}))
        col = checkerboard_color(arr)
        d = dual_quadrangulation(arr, col)
        return RenderResponse(svg=render_svg(arr, col, req.chart),
                              dual_dot=render_dual_dot(d))

    return app


def _config_response(config: Configuration) -> ConfigurationResponse:
    report = validate_configuration(config)
    return ConfigurationResponse(configuration=config_to_json(config),
                                 coherent=report.ok)


app = create_app()
