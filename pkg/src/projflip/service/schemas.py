"""Pydantic request/response models for the HTTP service.

Geometry payloads reuse the JSON dialects from the serialize module;
these models only pin down the envelope shapes.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class LineSetRequest(BaseModel):
    lines: list[list[str]]


class RenderRequest(BaseModel):
    lines: list[list[str]]
    chart: str = "auto"


class CensusResponse(BaseModel):
    n: int
    vertices: int
    arcs: int
    regions: int
    euler: int
    triangles: list[int]


class ColoringResponse(BaseModel):
    base_region: int
    colors: dict[int, str]


class DualResponse(BaseModel):
    dots: dict[int, str]
    edges: list[list[int]]
    faces: list[dict]


class FlipRequest(BaseModel):
    configuration: dict
    site: int | list[int]
    direction: str


class WordRequest(BaseModel):
    configuration: dict
    word: dict


class ConfigurationResponse(BaseModel):
    configuration: dict
    coherent: bool


class SimulateRequest(BaseModel):
    script: dict


class SimulateResponse(BaseModel):
    events: list[dict]
    word: dict
    samples: list[str]
    consistent: bool


class VerifyRequest(BaseModel):
    manifest: dict | None = Field(default=None)


class VerifyResponse(BaseModel):
    report: dict


class RenderResponse(BaseModel):
    svg: str
    dual_dot: str


class ErrorBody(BaseModel):
    error: str
    detail: str
