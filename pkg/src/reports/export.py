"""Byte-deterministic DOT / JSON / edge-list renderings of a torus graph.

DOT serves as the drawing of the torus: any external Graphviz renderer can
lay it out.
"""

from enum import StrEnum
from typing import List

from pydantic import BaseModel

from torus.graph import TorusGraph, TorusParams, decode_vertex


class ExportFormat(StrEnum):
    DOT = "dot"
    JSON = "json"
    EDGELIST = "edgelist"


class VertexRecord(BaseModel):
    index: int
    j: int
    i: int
    t: int


class GraphDocument(BaseModel):
    params: TorusParams
    vertices: List[VertexRecord]
    edges: List[List[int]]


def dot_node_id(graph: TorusGraph, index: int) -> str:
    v = decode_vertex(graph.params, index)
    return f"t{v.t}_r{v.i}_c{v.j}"


def _to_dot(graph: TorusGraph) -> str:
    m, n = graph.params.m, graph.params.n
    lines = [f"graph TRC4C8_m{m}_n{n} {{"]
    for index in range(graph.order):
        lines.append(f"    {dot_node_id(graph, index)};")
    for a, b in graph.edges():
        lines.append(f"    {dot_node_id(graph, a)} -- {dot_node_id(graph, b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_json(graph: TorusGraph) -> str:
    vertices = []
    for index in range(graph.order):
        v = decode_vertex(graph.params, index)
        vertices.append(VertexRecord(index=index, j=v.j, i=v.i, t=v.t))
    document = GraphDocument(
        params=graph.params,
        vertices=vertices,
        edges=[[a, b] for a, b in graph.edges()],
    )
    return document.model_dump_json(indent=2) + "\n"


def _to_edgelist(graph: TorusGraph) -> str:
    return "".join(f"{a} {b}\n" for a, b in graph.edges())


def export_graph(graph: TorusGraph, format: ExportFormat) -> bytes:
    renderers = {
        ExportFormat.DOT: _to_dot,
        ExportFormat.JSON: _to_json,
        ExportFormat.EDGELIST: _to_edgelist,
    }
    return renderers[ExportFormat(format)](graph).encode("utf-8")
