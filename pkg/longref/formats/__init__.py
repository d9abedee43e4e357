from longref.formats.graph6 import (
    parse_graph6,
    write_graph6,
    read_graph6_file,
    read_graph6_lines,
    write_graph6_file,
)
from longref.formats.dot import write_dot
from longref.formats.trace import (
    dumps_trace,
    loads_trace,
    read_trace_jsonl,
    write_trace_jsonl,
)
