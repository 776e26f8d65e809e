from kkclique.data_source_connection.read_graph_file import (
    ReadEdgeList,
    format_edge_list,
    parse_edge_list,
    read_graph,
    write_graph,
)

__all__ = ["ReadEdgeList", "format_edge_list", "parse_edge_list", "read_graph", "write_graph"]
