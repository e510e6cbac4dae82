#ifndef QQF_CATALOG_DATA_HPP
#define QQF_CATALOG_DATA_HPP

/// Generated from data/catalog by cmake/embed_catalog.cmake; do not edit.

namespace qqf::detail {

struct EmbeddedDocument {
  const char* name;
  const char* text;
};

inline constexpr EmbeddedDocument embedded_catalog[] = {
    {"g2", R"qqfdoc({
  "name": "g2",
  "basis": [
    {"name": "x1", "parity": 0},
    {"name": "x2", "parity": 0},
    {"name": "y1", "parity": 1},
    {"name": "y2", "parity": 1}
  ],
  "brackets": [
    {"left": "x1", "right": "y1", "value": {"y2": "1"}},
    {"left": "y1", "right": "y1", "value": {"x2": "1"}}
  ],
  "forms": {
    "B": {"parity": 0, "kind": "symmetric", "values": [
      ["x1", "x2", "-1"],
      ["y1", "y2", "1"]
    ]},
    "omega": {"parity": 0, "kind": "antisymmetric", "values": [
      ["x1", "x2", "2"],
      ["y1", "y2", "1"]
    ]}
  },
  "endos": {
    "delta": {"parity": 0, "entries": [
      ["x1", "x1", "-2"],
      ["x2", "x2", "2"],
      ["y1", "y1", "1"],
      ["y2", "y2", "-1"]
    ]},
    "rho": {"parity": 0, "entries": [
      ["x1", "x1", "-1/2"],
      ["x2", "x2", "1/2"],
      ["y1", "y1", "1"],
      ["y2", "y2", "-1"]
    ]}
  }
}
)qqfdoc"},
    {"g4", R"qqfdoc({
  "name": "g4",
  "basis": [
    {"name": "x1", "parity": 0},
    {"name": "x2", "parity": 0},
    {"name": "y1", "parity": 1},
    {"name": "y2", "parity": 1}
  ],
  "brackets": [
    {"left": "y1", "right": "y1", "value": {"x1": "1"}},
    {"left": "y1", "right": "y2", "value": {"x2": "1"}}
  ],
  "forms": {
    "B": {"parity": 1, "kind": "symmetric", "values": [
      ["x1", "y2", "1"],
      ["x2", "y1", "1"]
    ]},
    "omega": {"parity": 1, "kind": "antisymmetric", "values": [
      ["x1", "y2", "-2"],
      ["x2", "y1", "1"]
    ]}
  },
  "endos": {
    "delta": {"parity": 0, "entries": [
      ["x1", "x1", "-2"],
      ["x2", "x2", "1"],
      ["y1", "y1", "-1"],
      ["y2", "y2", "2"]
    ]},
    "rho": {"parity": 0, "entries": [
      ["x1", "x1", "-1/2"],
      ["x2", "x2", "1"],
      ["y1", "y1", "-1"],
      ["y2", "y2", "1/2"]
    ]}
  }
}
)qqfdoc"},
    {"K+h3", R"qqfdoc({
  "name": "K+h3",
  "basis": [
    {"name": "x1", "parity": 0},
    {"name": "x2", "parity": 0},
    {"name": "x3", "parity": 0},
    {"name": "x4", "parity": 0}
  ],
  "brackets": [
    {"left": "x1", "right": "x2", "value": {"x3": "1"}}
  ],
  "forms": {
    "omega": {"parity": 0, "kind": "antisymmetric", "values": [
      ["x1", "x4", "1"],
      ["x2", "x3", "1"]
    ]}
  },
  "endos": {}
}
)qqfdoc"},
    {"g3", R"qqfdoc({
  "name": "g3",
  "basis": [
    {"name": "x1", "parity": 0},
    {"name": "x2", "parity": 0},
    {"name": "y1", "parity": 1},
    {"name": "y2", "parity": 1}
  ],
  "brackets": [
    {"left": "x1", "right": "y1", "value": {"y2": "1"}}
  ],
  "forms": {
    "omega": {"parity": 1, "kind": "antisymmetric", "values": [
      ["x1", "y2", "1"],
      ["x2", "y1", "1"]
    ]}
  },
  "endos": {}
}
)qqfdoc"},
    {"dex6-even", R"qqfdoc({
  "name": "dex6-even",
  "basis": [
    {"name": "d", "parity": 0},
    {"name": "e1", "parity": 0},
    {"name": "e2", "parity": 0},
    {"name": "e3", "parity": 0},
    {"name": "e4", "parity": 0},
    {"name": "e", "parity": 0}
  ],
  "brackets": [
    {"left": "d", "right": "e3", "value": {"e1": "-1"}},
    {"left": "d", "right": "e4", "value": {"e2": "1"}},
    {"left": "e3", "right": "e4", "value": {"e": "2"}}
  ],
  "forms": {
    "B": {"parity": 0, "kind": "symmetric", "values": [
      ["d", "e", "1"],
      ["e1", "e4", "-2"],
      ["e2", "e3", "-2"]
    ]},
    "omega": {"parity": 0, "kind": "antisymmetric", "values": [
      ["d", "e", "-1"],
      ["e1", "e4", "1"],
      ["e2", "e3", "1"]
    ]}
  },
  "endos": {
    "delta": {"parity": 0, "entries": [
      ["d", "d", "-1"],
      ["e1", "e1", "-1/2"],
      ["e2", "e2", "-1/2"],
      ["e3", "e3", "1/2"],
      ["e4", "e4", "1/2"],
      ["e", "e", "1"]
    ]},
    "rho": {"parity": 0, "entries": [
      ["d", "d", "-1"],
      ["e1", "e1", "-2"],
      ["e2", "e2", "-2"],
      ["e3", "e3", "2"],
      ["e4", "e4", "2"],
      ["e", "e", "1"]
    ]}
  }
}
)qqfdoc"},
    {"dex6-odd", R"qqfdoc({
  "name": "dex6-odd",
  "basis": [
    {"name": "d", "parity": 0},
    {"name": "e", "parity": 0},
    {"name": "e1", "parity": 1},
    {"name": "e2", "parity": 1},
    {"name": "e3", "parity": 1},
    {"name": "e4", "parity": 1}
  ],
  "brackets": [
    {"left": "d", "right": "e3", "value": {"e1": "-1"}},
    {"left": "d", "right": "e4", "value": {"e2": "-1"}},
    {"left": "e3", "right": "e4", "value": {"e": "2"}}
  ],
  "forms": {
    "B": {"parity": 0, "kind": "symmetric", "values": [
      ["d", "e", "1"],
      ["e1", "e4", "-2"],
      ["e2", "e3", "-2"]
    ]},
    "omega": {"parity": 0, "kind": "antisymmetric", "values": [
      ["d", "e", "-1"],
      ["e1", "e4", "1"],
      ["e2", "e3", "1"]
    ]}
  },
  "endos": {
    "delta": {"parity": 0, "entries": [
      ["d", "d", "-1"],
      ["e", "e", "1"],
      ["e1", "e1", "-1/2"],
      ["e2", "e2", "-1/2"],
      ["e3", "e3", "1/2"],
      ["e4", "e4", "1/2"]
    ]},
    "rho": {"parity": 0, "entries": [
      ["d", "d", "-1"],
      ["e", "e", "1"],
      ["e1", "e1", "-2"],
      ["e2", "e2", "-2"],
      ["e3", "e3", "2"],
      ["e4", "e4", "2"]
    ]}
  }
}
)qqfdoc"},
    {"dex6-mixed", R"qqfdoc({
  "name": "dex6-mixed",
  "basis": [
    {"name": "d", "parity": 0},
    {"name": "e1", "parity": 0},
    {"name": "e2", "parity": 0},
    {"name": "e", "parity": 0},
    {"name": "e3", "parity": 1},
    {"name": "e4", "parity": 1}
  ],
  "brackets": [
    {"left": "d", "right": "e4", "value": {"e3": "-1"}},
    {"left": "e4", "right": "e4", "value": {"e": "2"}}
  ],
  "forms": {
    "B": {"parity": 0, "kind": "symmetric", "values": [
      ["d", "e", "1"],
      ["e1", "e2", "1"],
      ["e3", "e4", "-2"]
    ]},
    "omega": {"parity": 0, "kind": "antisymmetric", "values": [
      ["d", "e", "-1"],
      ["e1", "e2", "1"],
      ["e3", "e4", "1"]
    ]}
  },
  "endos": {
    "delta": {"parity": 0, "entries": [
      ["d", "d", "-1"],
      ["e1", "e1", "1"],
      ["e2", "e2", "-1"],
      ["e", "e", "1"],
      ["e3", "e3", "-1/2"],
      ["e4", "e4", "1/2"]
    ]},
    "rho": {"parity": 0, "entries": [
      ["d", "d", "-1"],
      ["e1", "e1", "1"],
      ["e2", "e2", "-1"],
      ["e", "e", "1"],
      ["e3", "e3", "-2"],
      ["e4", "e4", "2"]
    ]}
  }
}
)qqfdoc"},
    {"dex6-peri", R"qqfdoc({
  "name": "dex6-peri",
  "basis": [
    {"name": "d", "parity": 0},
    {"name": "e1", "parity": 0},
    {"name": "e2", "parity": 0},
    {"name": "e3", "parity": 1},
    {"name": "e4", "parity": 1},
    {"name": "e", "parity": 1}
  ],
  "brackets": [
    {"left": "d", "right": "e1", "value": {"e2": "-1"}},
    {"left": "d", "right": "e4", "value": {"e3": "-1"}},
    {"left": "e1", "right": "e4", "value": {"e": "2"}}
  ],
  "forms": {
    "B": {"parity": 1, "kind": "symmetric", "values": [
      ["d", "e", "1"],
      ["e1", "e3", "2"],
      ["e2", "e4", "-2"]
    ]},
    "omega": {"parity": 1, "kind": "antisymmetric", "values": [
      ["d", "e", "-1"],
      ["e1", "e3", "1"],
      ["e2", "e4", "1"]
    ]}
  },
  "endos": {
    "delta": {"parity": 0, "entries": [
      ["d", "d", "-1"],
      ["e1", "e1", "1/2"],
      ["e2", "e2", "-1/2"],
      ["e3", "e3", "-1/2"],
      ["e4", "e4", "1/2"],
      ["e", "e", "1"]
    ]},
    "rho": {"parity": 0, "entries": [
      ["d", "d", "-1"],
      ["e1", "e1", "2"],
      ["e2", "e2", "-2"],
      ["e3", "e3", "-2"],
      ["e4", "e4", "2"],
      ["e", "e", "1"]
    ]}
  }
}
)qqfdoc"},
    {"planar8", R"qqfdoc({
  "name": "planar8",
  "basis": [
    {"name": "d0", "parity": 0},
    {"name": "f1", "parity": 0},
    {"name": "f2", "parity": 0},
    {"name": "e0", "parity": 0},
    {"name": "d1", "parity": 1},
    {"name": "f3", "parity": 1},
    {"name": "f4", "parity": 1},
    {"name": "e1", "parity": 1}
  ],
  "brackets": [
    {"left": "d0", "right": "f4", "value": {"f3": "-3"}},
    {"left": "f1", "right": "d1", "value": {"f3": "3"}},
    {"left": "f1", "right": "f4", "value": {"e1": "3"}},
    {"left": "d1", "right": "f4", "value": {"f2": "3/2"}},
    {"left": "f4", "right": "f4", "value": {"e0": "-3"}}
  ],
  "forms": {
    "B": {"parity": 0, "kind": "symmetric", "values": [
      ["d0", "e0", "1"],
      ["f1", "f2", "2"],
      ["d1", "e1", "-1"],
      ["f3", "f4", "1"]
    ]},
    "omega": {"parity": 1, "kind": "antisymmetric", "values": [
      ["d0", "e1", "-1"],
      ["f1", "f3", "1"],
      ["f2", "f4", "1"],
      ["e0", "d1", "1"]
    ]}
  },
  "endos": {
    "delta": {"parity": 1, "entries": [
      ["d0", "d1", "-1"],
      ["f1", "f4", "-1/2"],
      ["f2", "f3", "-1/2"],
      ["e0", "e1", "1"],
      ["d1", "d0", "1"],
      ["f3", "f2", "1"],
      ["f4", "f1", "-1"],
      ["e1", "e0", "1"]
    ]},
    "rho": {"parity": 1, "entries": [
      ["d0", "d1", "1"],
      ["f1", "f4", "-1"],
      ["f2", "f3", "1"],
      ["e0", "e1", "1"],
      ["d1", "d0", "-1"],
      ["f3", "f2", "-2"],
      ["f4", "f1", "-2"],
      ["e1", "e0", "1"]
    ]}
  }
}
)qqfdoc"},
};

}  // namespace qqf::detail

#endif  // QQF_CATALOG_DATA_HPP
