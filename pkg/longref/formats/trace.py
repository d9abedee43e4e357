from pathlib import Path
from typing import Union

from longref.structs import Colouring, RefinementTrace, SplitRecord, TraceRecord


def trace_records(trace: RefinementTrace) -> list[TraceRecord]:
    records = []
    for i, colouring in enumerate(trace.partitions):
        split = [] if i == 0 else [s.to_dict() for s in trace.splits[i - 1]]
        records.append(
            TraceRecord(
                iteration=i,
                num_classes=colouring.k,
                classes=[list(c) for c in colouring.classes()],
                split=split,
            )
        )
    return records


def dumps_trace(trace: RefinementTrace) -> str:
    return "".join(r.model_dump_json() + "\n" for r in trace_records(trace))


def loads_trace(text: str) -> RefinementTrace:
    records = [TraceRecord.model_validate_json(line) for line in text.splitlines() if line.strip()]
    partitions = []
    splits = []
    for expected, record in enumerate(records):
        if record.iteration != expected:
            raise ValueError(f"trace record {expected} has iteration {record.iteration}")
        n = sum(len(c) for c in record.classes)
        colour = [0] * n
        for cid, members in enumerate(record.classes):
            for v in members:
                colour[v] = cid
        partitions.append(Colouring(colour=tuple(colour), k=len(record.classes)))
        if expected > 0:
            splits.append(
                [
                    SplitRecord(
                        parent=tuple(s["parent"]),
                        children=tuple(tuple(c) for c in s["children"]),
                    )
                    for s in record.split
                ]
            )
    return RefinementTrace(partitions=partitions, splits=splits)


def write_trace_jsonl(trace: RefinementTrace, path: Union[str, Path]):
    with open(path, "w") as f:
        f.write(dumps_trace(trace))


def read_trace_jsonl(path: Union[str, Path]) -> RefinementTrace:
    with open(path, "r") as f:
        return loads_trace(f.read())
