#include "pbck/axioms.hpp"

#include <set>

#include "algebra_clauses.hpp"

namespace pbck {

namespace {

using A = finite_algebra;
using AC = detail::clause<A>;

element ar(const A& a, element x, element y) { return a.arrow(x, y); }
element sq(const A& a, element x, element y) { return a.squiggle(x, y); }
bool le(const A& a, element x, element y) { return a.arrow(x, y) == a.top(); }

std::string N(const A& a, element x) { return a.name_of(x); }

std::string tup(const A& a, const element* t, int k) {
    static const char* vars[] = {"x", "y", "z"};
    std::string lhs = "(", rhs = "(";
    for (int i = 0; i < k; ++i) {
        if (i) {
            lhs += ",";
            rhs += ",";
        }
        lhs += vars[i];
        rhs += N(a, t[i]);
    }
    return lhs + ")=" + rhs + ")";
}

std::string two_sided(const A& a, const element* t, int k, const char* schema, element lhs,
                      element rhs) {
    return std::string(schema) + ": lhs = " + N(a, lhs) + ", rhs = " + N(a, rhs) + " at " +
           tup(a, t, k);
}

std::string not_top(const A& a, const element* t, int k, const char* schema, element got) {
    return std::string(schema) + " = " + N(a, got) + " at " + tup(a, t, k) + ", expected " +
           N(a, a.top());
}

// ---- relational system psBCK1..psBCK6 ------------------------------------

const AC relational_clauses[] = {
    {"psBCK1", 3,
     [](const A& a, const element* t) {
         return le(a, ar(a, t[0], t[1]), sq(a, ar(a, t[1], t[2]), ar(a, t[0], t[2]))) &&
                le(a, sq(a, t[0], t[1]), ar(a, sq(a, t[1], t[2]), sq(a, t[0], t[2])));
     },
     [](const A& a, const element* t) {
         const bool first = le(a, ar(a, t[0], t[1]), sq(a, ar(a, t[1], t[2]), ar(a, t[0], t[2])));
         return std::string(first ? "x~>y <= (y~>z)->(x~>z)" : "x->y <= (y->z)~>(x->z)") +
                " fails at " + tup(a, t, 3);
     }},
    {"psBCK2", 2,
     [](const A& a, const element* t) {
         return le(a, t[0], sq(a, ar(a, t[0], t[1]), t[1])) &&
                le(a, t[0], ar(a, sq(a, t[0], t[1]), t[1]));
     },
     [](const A& a, const element* t) {
         const bool first = le(a, t[0], sq(a, ar(a, t[0], t[1]), t[1]));
         return std::string(first ? "x <= (x~>y)->y" : "x <= (x->y)~>y") + " fails at " +
                tup(a, t, 2);
     }},
    {"psBCK3", 1, [](const A& a, const element* t) { return le(a, t[0], t[0]); },
     [](const A& a, const element* t) {
         return N(a, t[0]) + " <= " + N(a, t[0]) + " fails (" + N(a, t[0]) + "->" + N(a, t[0]) +
                " = " + N(a, ar(a, t[0], t[0])) + ")";
     }},
    {"psBCK4", 1, [](const A& a, const element* t) { return le(a, t[0], a.top()); },
     [](const A& a, const element* t) {
         return N(a, t[0]) + " <= " + N(a, a.top()) + " fails (" + N(a, t[0]) + "->" +
                N(a, a.top()) + " = " + N(a, ar(a, t[0], a.top())) + ")";
     }},
    {"psBCK5", 2,
     [](const A& a, const element* t) {
         return !(t[0] != t[1] && le(a, t[0], t[1]) && le(a, t[1], t[0]));
     },
     [](const A& a, const element* t) {
         return N(a, t[0]) + " <= " + N(a, t[1]) + " and " + N(a, t[1]) + " <= " + N(a, t[0]) +
                " but " + N(a, t[0]) + " != " + N(a, t[1]);
     }},
    {"psBCK6", 2,
     [](const A& a, const element* t) {
         return (ar(a, t[0], t[1]) == a.top()) == (sq(a, t[0], t[1]) == a.top());
     },
     [](const A& a, const element* t) {
         return "x->y = " + N(a, ar(a, t[0], t[1])) + " but x~>y = " + N(a, sq(a, t[0], t[1])) +
                " at " + tup(a, t, 2) + " (top agreement)";
     }},
};

// ---- equational system psBCK1'..psBCK6' ----------------------------------

bool eq1_holds(const A& a, const element* t) {
    return sq(a, ar(a, t[0], t[1]), sq(a, ar(a, t[1], t[2]), ar(a, t[0], t[2]))) == a.top();
}
bool eq2_holds(const A& a, const element* t) {
    return ar(a, sq(a, t[0], t[1]), ar(a, sq(a, t[1], t[2]), sq(a, t[0], t[2]))) == a.top();
}
bool eq3_holds(const A& a, const element* t) { return ar(a, a.top(), t[0]) == t[0]; }
bool eq4_holds(const A& a, const element* t) { return sq(a, a.top(), t[0]) == t[0]; }
bool eq6_holds(const A& a, const element* t) {
    return !(t[0] != t[1] && ar(a, t[0], t[1]) == a.top() && ar(a, t[1], t[0]) == a.top());
}

std::string eq1_describe(const A& a, const element* t) {
    return not_top(a, t, 3, "(x->y)~>((y->z)~>(x->z))",
                   sq(a, ar(a, t[0], t[1]), sq(a, ar(a, t[1], t[2]), ar(a, t[0], t[2]))));
}
std::string eq2_describe(const A& a, const element* t) {
    return not_top(a, t, 3, "(x~>y)->((y~>z)->(x~>z))",
                   ar(a, sq(a, t[0], t[1]), ar(a, sq(a, t[1], t[2]), sq(a, t[0], t[2]))));
}
std::string eq3_describe(const A& a, const element* t) {
    return N(a, a.top()) + "->" + N(a, t[0]) + " = " + N(a, ar(a, a.top(), t[0])) +
           ", expected " + N(a, t[0]);
}
std::string eq4_describe(const A& a, const element* t) {
    return N(a, a.top()) + "~>" + N(a, t[0]) + " = " + N(a, sq(a, a.top(), t[0])) +
           ", expected " + N(a, t[0]);
}
std::string eq6_describe(const A& a, const element* t) {
    return N(a, t[0]) + "->" + N(a, t[1]) + " = 1 and " + N(a, t[1]) + "->" + N(a, t[0]) +
           " = 1 but " + N(a, t[0]) + " != " + N(a, t[1]);
}

const AC equational_clauses[] = {
    {"psBCK1'", 3, eq1_holds, eq1_describe},
    {"psBCK2'", 3, eq2_holds, eq2_describe},
    {"psBCK3'", 1, eq3_holds, eq3_describe},
    {"psBCK4'", 1, eq4_holds, eq4_describe},
    {"psBCK5'", 1, [](const A& a, const element* t) { return ar(a, t[0], a.top()) == a.top(); },
     [](const A& a, const element* t) {
         return N(a, t[0]) + "->" + N(a, a.top()) + " = " + N(a, ar(a, t[0], a.top())) +
                ", expected " + N(a, a.top());
     }},
    {"psBCK6'", 2, eq6_holds, eq6_describe},
};

const AC pseudo_bci_clauses[] = {
    {"psBCK1'", 3, eq1_holds, eq1_describe}, {"psBCK2'", 3, eq2_holds, eq2_describe},
    {"psBCK3'", 1, eq3_holds, eq3_describe}, {"psBCK4'", 1, eq4_holds, eq4_describe},
    {"psBCK6'", 2, eq6_holds, eq6_describe},
};

// ---- pseudo BE system psBE1..psBE5 ---------------------------------------

const AC pseudo_be_clauses[] = {
    {"psBE1", 1,
     [](const A& a, const element* t) {
         return ar(a, t[0], t[0]) == a.top() && sq(a, t[0], t[0]) == a.top();
     },
     [](const A& a, const element* t) {
         return "x->x = " + N(a, ar(a, t[0], t[0])) + ", x~>x = " + N(a, sq(a, t[0], t[0])) +
                " at " + tup(a, t, 1) + ", expected " + N(a, a.top());
     }},
    {"psBE2", 1,
     [](const A& a, const element* t) {
         return ar(a, t[0], a.top()) == a.top() && sq(a, t[0], a.top()) == a.top();
     },
     [](const A& a, const element* t) {
         return "x->1 = " + N(a, ar(a, t[0], a.top())) + ", x~>1 = " +
                N(a, sq(a, t[0], a.top())) + " at " + tup(a, t, 1) + ", expected " +
                N(a, a.top());
     }},
    {"psBE3", 1,
     [](const A& a, const element* t) {
         return ar(a, a.top(), t[0]) == t[0] && sq(a, a.top(), t[0]) == t[0];
     },
     [](const A& a, const element* t) {
         return "1->x = " + N(a, ar(a, a.top(), t[0])) + ", 1~>x = " +
                N(a, sq(a, a.top(), t[0])) + " at " + tup(a, t, 1) + ", expected " + N(a, t[0]);
     }},
    {"psBE4", 3,
     [](const A& a, const element* t) {
         return ar(a, t[0], sq(a, t[1], t[2])) == sq(a, t[1], ar(a, t[0], t[2]));
     },
     [](const A& a, const element* t) {
         return two_sided(a, t, 3, "x->(y~>z) = y~>(x->z)", ar(a, t[0], sq(a, t[1], t[2])),
                          sq(a, t[1], ar(a, t[0], t[2])));
     }},
    {"psBE5", 2,
     [](const A& a, const element* t) {
         return (ar(a, t[0], t[1]) == a.top()) == (sq(a, t[0], t[1]) == a.top());
     },
     [](const A& a, const element* t) {
         return "x->y = " + N(a, ar(a, t[0], t[1])) + " but x~>y = " + N(a, sq(a, t[0], t[1])) +
                " at " + tup(a, t, 2) + " (top agreement)";
     }},
};

// ---- basic laws L1..L6 ----------------------------------------------------

const AC basic_law_clauses[] = {
    {"L1", 3,
     [](const A& a, const element* t) {
         return !le(a, t[0], t[1]) || (le(a, ar(a, t[2], t[0]), ar(a, t[2], t[1])) &&
                                       le(a, sq(a, t[2], t[0]), sq(a, t[2], t[1])));
     },
     [](const A& a, const element* t) {
         return "x <= y but z->x <= z->y or z~>x <= z~>y fails at " + tup(a, t, 3);
     }},
    {"L2", 3,
     [](const A& a, const element* t) {
         return !le(a, t[0], t[1]) || (le(a, ar(a, t[1], t[2]), ar(a, t[0], t[2])) &&
                                       le(a, sq(a, t[1], t[2]), sq(a, t[0], t[2])));
     },
     [](const A& a, const element* t) {
         return "x <= y but y->z <= x->z or y~>z <= x~>z fails at " + tup(a, t, 3);
     }},
    {"L3", 3,
     [](const A& a, const element* t) {
         return le(a, ar(a, t[0], t[1]), ar(a, ar(a, t[2], t[0]), ar(a, t[2], t[1]))) &&
                le(a, sq(a, t[0], t[1]), sq(a, sq(a, t[2], t[0]), sq(a, t[2], t[1])));
     },
     [](const A& a, const element* t) {
         return "x->y <= (z->x)->(z->y) or x~>y <= (z~>x)~>(z~>y) fails at " + tup(a, t, 3);
     }},
    {"L4", 3,
     [](const A& a, const element* t) {
         return ar(a, t[0], sq(a, t[1], t[2])) == sq(a, t[1], ar(a, t[0], t[2])) &&
                sq(a, t[0], ar(a, t[1], t[2])) == ar(a, t[1], sq(a, t[0], t[2]));
     },
     [](const A& a, const element* t) {
         return "x->(y~>z) = y~>(x->z) or x~>(y->z) = y->(x~>z) fails at " + tup(a, t, 3);
     }},
    {"L5", 2,
     [](const A& a, const element* t) {
         return le(a, t[0], ar(a, t[1], t[0])) && le(a, t[0], sq(a, t[1], t[0]));
     },
     [](const A& a, const element* t) {
         return "x <= y->x or x <= y~>x fails at " + tup(a, t, 2);
     }},
    {"L6", 2,
     [](const A& a, const element* t) {
         return ar(a, sq(a, ar(a, t[0], t[1]), t[1]), t[1]) == ar(a, t[0], t[1]) &&
                sq(a, ar(a, sq(a, t[0], t[1]), t[1]), t[1]) == sq(a, t[0], t[1]);
     },
     [](const A& a, const element* t) {
         return "((x->y)~>y)->y = x->y or ((x~>y)->y)~>y = x~>y fails at " + tup(a, t, 2);
     }},
};

// ---- commutativity methods ------------------------------------------------

element join_ar(const A& a, element x, element y) { return sq(a, ar(a, x, y), y); }
element join_sq(const A& a, element x, element y) { return ar(a, sq(a, x, y), y); }

const AC def_clauses[] = {
    {"def1", 2,
     [](const A& a, const element* t) { return join_ar(a, t[0], t[1]) == join_ar(a, t[1], t[0]); },
     [](const A& a, const element* t) {
         return two_sided(a, t, 2, "(x->y)~>y = (y->x)~>x", join_ar(a, t[0], t[1]),
                          join_ar(a, t[1], t[0]));
     }},
    {"def2", 2,
     [](const A& a, const element* t) { return join_sq(a, t[0], t[1]) == join_sq(a, t[1], t[0]); },
     [](const A& a, const element* t) {
         return two_sided(a, t, 2, "(x~>y)->y = (y~>x)->x", join_sq(a, t[0], t[1]),
                          join_sq(a, t[1], t[0]));
     }},
};

const AC one_sided_clauses[] = {
    {"os1", 2,
     [](const A& a, const element* t) {
         return le(a, join_ar(a, t[0], t[1]), join_ar(a, t[1], t[0]));
     },
     [](const A& a, const element* t) {
         return "(x->y)~>y <= (y->x)~>x fails at " + tup(a, t, 2);
     }},
    {"os2", 2,
     [](const A& a, const element* t) {
         return le(a, join_sq(a, t[0], t[1]), join_sq(a, t[1], t[0]));
     },
     [](const A& a, const element* t) {
         return "(x~>y)->y <= (y~>x)->x fails at " + tup(a, t, 2);
     }},
};

bool y1_holds(const A& a, const element* t) {
    return join_ar(a, t[0], t[1]) == join_ar(a, t[1], t[0]) &&
           join_sq(a, t[0], t[1]) == join_sq(a, t[1], t[0]);
}
std::string y1_describe(const A& a, const element* t) {
    if (join_ar(a, t[0], t[1]) != join_ar(a, t[1], t[0]))
        return two_sided(a, t, 2, "(x->y)~>y = (y->x)~>x", join_ar(a, t[0], t[1]),
                         join_ar(a, t[1], t[0]));
    return two_sided(a, t, 2, "(x~>y)->y = (y~>x)->x", join_sq(a, t[0], t[1]),
                     join_sq(a, t[1], t[0]));
}
bool y2_holds(const A& a, const element* t) {
    return ar(a, t[0], sq(a, t[1], t[2])) == sq(a, t[1], ar(a, t[0], t[2]));
}
std::string y2_describe(const A& a, const element* t) {
    return two_sided(a, t, 3, "x->(y~>z) = y~>(x->z)", ar(a, t[0], sq(a, t[1], t[2])),
                     sq(a, t[1], ar(a, t[0], t[2])));
}
bool y4_holds(const A& a, const element* t) {
    return ar(a, a.top(), t[0]) == t[0] && sq(a, a.top(), t[0]) == t[0];
}
std::string y4_describe(const A& a, const element* t) {
    return "1->x = " + N(a, ar(a, a.top(), t[0])) + ", 1~>x = " + N(a, sq(a, a.top(), t[0])) +
           " at " + tup(a, t, 1) + ", expected " + N(a, t[0]);
}

const AC yutani_clauses[] = {
    {"Y1", 2, y1_holds, y1_describe},
    {"Y2", 3, y2_holds, y2_describe},
    {"Y3", 1,
     [](const A& a, const element* t) {
         return ar(a, t[0], t[0]) == a.top() && sq(a, t[0], t[0]) == a.top();
     },
     [](const A& a, const element* t) {
         return "x->x = " + N(a, ar(a, t[0], t[0])) + ", x~>x = " + N(a, sq(a, t[0], t[0])) +
                " at " + tup(a, t, 1) + ", expected " + N(a, a.top());
     }},
    {"Y4", 1, y4_holds, y4_describe},
};

const AC kuhr_clauses[] = {
    {"K1", 2, y1_holds, y1_describe},
    {"K2", 3, y2_holds, y2_describe},
    {"K3", 1,
     [](const A& a, const element* t) {
         return ar(a, t[0], a.top()) == a.top() && sq(a, t[0], a.top()) == a.top();
     },
     [](const A& a, const element* t) {
         return "x->1 = " + N(a, ar(a, t[0], a.top())) + ", x~>1 = " +
                N(a, sq(a, t[0], a.top())) + " at " + tup(a, t, 1) + ", expected " +
                N(a, a.top());
     }},
    {"K4", 1, y4_holds, y4_describe},
};

const AC palasinski_clauses[] = {
    {"P1", 3,
     [](const A& a, const element* t) {
         return ar(a, ar(a, t[0], sq(a, t[1], t[2])), sq(a, t[1], ar(a, t[0], t[2]))) ==
                    a.top() &&
                ar(a, sq(a, t[0], ar(a, t[1], t[2])), ar(a, t[1], sq(a, t[0], t[2]))) == a.top();
     },
     [](const A& a, const element* t) {
         const element v1 =
             ar(a, ar(a, t[0], sq(a, t[1], t[2])), sq(a, t[1], ar(a, t[0], t[2])));
         if (v1 != a.top())
             return not_top(a, t, 3, "(x->(y~>z))->(y~>(x->z))", v1);
         return not_top(a, t, 3, "(x~>(y->z))->(y->(x~>z))",
                        ar(a, sq(a, t[0], ar(a, t[1], t[2])), ar(a, t[1], sq(a, t[0], t[2]))));
     }},
    {"P2", 2, y1_holds, y1_describe},
    {"P3", 3,
     [](const A& a, const element* t) {
         const element u = ar(a, t[0], sq(a, t[1], t[0]));
         const element v = sq(a, t[0], ar(a, t[1], t[0]));
         return ar(a, u, t[2]) == t[2] && sq(a, u, t[2]) == t[2] && ar(a, v, t[2]) == t[2] &&
                sq(a, v, t[2]) == t[2];
     },
     [](const A& a, const element* t) {
         return "(x->(y~>x))->z = (x->(y~>x))~>z = z or its mirror fails at " + tup(a, t, 3);
     }},
};

const AC cornish_clauses[] = {
    {"C1", 2,
     [](const A& a, const element* t) {
         return sq(a, ar(a, t[0], a.top()), t[1]) == t[1] &&
                ar(a, sq(a, t[0], a.top()), t[1]) == t[1];
     },
     [](const A& a, const element* t) {
         return "(x->1)~>y = " + N(a, sq(a, ar(a, t[0], a.top()), t[1])) + ", (x~>1)->y = " +
                N(a, ar(a, sq(a, t[0], a.top()), t[1])) + " at " + tup(a, t, 2) + ", expected " +
                N(a, t[1]);
     }},
    {"C2", 3,
     [](const A& a, const element* t) {
         return sq(a, ar(a, t[0], t[1]), ar(a, t[2], t[1])) ==
                sq(a, ar(a, t[1], t[0]), ar(a, t[2], t[0]));
     },
     [](const A& a, const element* t) {
         return two_sided(a, t, 3, "(x->y)~>(z->y) = (y->x)~>(z->x)",
                          sq(a, ar(a, t[0], t[1]), ar(a, t[2], t[1])),
                          sq(a, ar(a, t[1], t[0]), ar(a, t[2], t[0])));
     }},
    {"C3", 3,
     [](const A& a, const element* t) {
         return ar(a, sq(a, t[0], t[1]), sq(a, t[2], t[1])) ==
                ar(a, sq(a, t[1], t[0]), sq(a, t[2], t[0]));
     },
     [](const A& a, const element* t) {
         return two_sided(a, t, 3, "(x~>y)->(z~>y) = (y~>x)->(z~>x)",
                          ar(a, sq(a, t[0], t[1]), sq(a, t[2], t[1])),
                          ar(a, sq(a, t[1], t[0]), sq(a, t[2], t[0])));
     }},
};

const AC char_b_clauses[] = {
    {"b1", 2,
     [](const A& a, const element* t) {
         return ar(a, t[0], t[1]) == ar(a, join_ar(a, t[1], t[0]), t[1]);
     },
     [](const A& a, const element* t) {
         return two_sided(a, t, 2, "x->y = ((y->x)~>x)->y", ar(a, t[0], t[1]),
                          ar(a, join_ar(a, t[1], t[0]), t[1]));
     }},
    {"b2", 2,
     [](const A& a, const element* t) {
         return sq(a, t[0], t[1]) == sq(a, join_sq(a, t[1], t[0]), t[1]);
     },
     [](const A& a, const element* t) {
         return two_sided(a, t, 2, "x~>y = ((y~>x)->x)~>y", sq(a, t[0], t[1]),
                          sq(a, join_sq(a, t[1], t[0]), t[1]));
     }},
};

const AC char_c_clauses[] = {
    {"c1", 2,
     [](const A& a, const element* t) {
         const element u = join_ar(a, t[0], t[1]);
         return u == sq(a, ar(a, u, t[0]), t[0]);
     },
     [](const A& a, const element* t) {
         const element u = join_ar(a, t[0], t[1]);
         return two_sided(a, t, 2, "(x->y)~>y = (((x->y)~>y)->x)~>x", u,
                          sq(a, ar(a, u, t[0]), t[0]));
     }},
    {"c2", 2,
     [](const A& a, const element* t) {
         const element u = join_sq(a, t[0], t[1]);
         return u == ar(a, sq(a, u, t[0]), t[0]);
     },
     [](const A& a, const element* t) {
         const element u = join_sq(a, t[0], t[1]);
         return two_sided(a, t, 2, "(x~>y)->y = (((x~>y)->y)~>x)->x", u,
                          ar(a, sq(a, u, t[0]), t[0]));
     }},
};

const AC char_d_clauses[] = {
    {"d", 2,
     [](const A& a, const element* t) {
         return !le(a, t[0], t[1]) ||
                (t[1] == join_ar(a, t[1], t[0]) && t[1] == join_sq(a, t[1], t[0]));
     },
     [](const A& a, const element* t) {
         return "x <= y but y = (y->x)~>x = (y~>x)->x fails at " + tup(a, t, 2) + " ((y->x)~>x = " +
                N(a, join_ar(a, t[1], t[0])) + ", (y~>x)->x = " + N(a, join_sq(a, t[1], t[0])) +
                ")";
     }},
};

} // namespace

namespace detail {

std::span<const clause<finite_algebra>> suite_clauses(std::string_view suite) {
    if (suite == "RELATIONAL") return relational_clauses;
    if (suite == "EQUATIONAL") return equational_clauses;
    if (suite == "PSEUDO_BCI") return pseudo_bci_clauses;
    if (suite == "PSEUDO_BE") return pseudo_be_clauses;
    if (suite == "BASIC_LAWS") return basic_law_clauses;
    if (suite == "DEF") return def_clauses;
    if (suite == "ONE_SIDED") return one_sided_clauses;
    if (suite == "YUTANI_KUHR") return yutani_clauses;
    if (suite == "KUHR_K") return kuhr_clauses;
    if (suite == "PALASINSKI_P") return palasinski_clauses;
    if (suite == "CORNISH_C") return cornish_clauses;
    if (suite == "CHAR_B") return char_b_clauses;
    if (suite == "CHAR_C") return char_c_clauses;
    if (suite == "CHAR_D") return char_d_clauses;
    return {};
}

} // namespace detail

check_report check_axiom_system(const finite_algebra& a, axiom_system sys, witness_mode wm) {
    const char* tag = nullptr;
    switch (sys) {
    case axiom_system::relational: tag = "RELATIONAL"; break;
    case axiom_system::equational: tag = "EQUATIONAL"; break;
    case axiom_system::pseudo_bci: tag = "PSEUDO_BCI"; break;
    case axiom_system::pseudo_be: tag = "PSEUDO_BE"; break;
    }
    return detail::run_clauses<finite_algebra>(tag, a.size(), a, detail::suite_clauses(tag), wm);
}

bool is_pbck(const finite_algebra& a) {
    const int n = a.size();
    const element t = a.top();
    for (element x = 0; x < n; ++x)
        if (a.arrow(t, x) != x || a.squiggle(t, x) != x || a.arrow(x, t) != t) return false;
    for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y)
            if (x != y && a.arrow(x, y) == t && a.arrow(y, x) == t) return false;
    for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y)
            for (element z = 0; z < n; ++z) {
                if (a.squiggle(a.arrow(x, y), a.squiggle(a.arrow(y, z), a.arrow(x, z))) != t)
                    return false;
                if (a.arrow(a.squiggle(x, y), a.arrow(a.squiggle(y, z), a.squiggle(x, z))) != t)
                    return false;
            }
    return true;
}

bool clause_holds(const finite_algebra& a, std::string_view suite, std::string_view clause,
                  std::span<const element> tuple) {
    const auto clauses = detail::suite_clauses(suite);
    const auto* cl = detail::find_clause(clauses, clause);
    if (!cl)
        throw error(errc::invalid_structure,
                    "unknown clause '" + std::string(clause) + "' in suite '" +
                        std::string(suite) + "'");
    if (static_cast<int>(tuple.size()) != cl->arity)
        throw error(errc::invalid_structure, "tuple arity mismatch");
    for (element x : tuple)
        if (x < 0 || x >= a.size()) throw error(errc::invalid_point, "tuple entry out of range");
    return cl->holds(a, tuple.data());
}

static void require_pbck(const finite_algebra& a, const char* op) {
    if (!is_pbck(a))
        throw error(errc::precondition_violated,
                    std::string(op) + " requires a pseudo BCK-algebra");
}

check_report check_basic_laws(const finite_algebra& a, witness_mode wm) {
    require_pbck(a, "check_basic_laws");
    return detail::run_clauses<finite_algebra>("BASIC_LAWS", a.size(), a,
                                               detail::suite_clauses("BASIC_LAWS"), wm);
}

boundedness boundedness_profile(const finite_algebra& a, std::optional<element> point_at) {
    require_pbck(a, "boundedness_profile");
    if (point_at && (*point_at < 0 || *point_at >= a.size()))
        throw error(errc::invalid_point, "point index out of range");
    const order_relation ord = derive_order(a);
    boundedness out;
    out.least = ord.least;
    if (ord.least) {
        const element zero = *ord.least;
        bool good = true;
        for (element x = 0; x < a.size() && good; ++x)
            good = a.squiggle(a.arrow(x, zero), zero) == a.arrow(a.squiggle(x, zero), zero);
        out.good = good;
    }
    if (point_at) {
        const element p = *point_at;
        bool inv = true;
        for (element x = 0; x < a.size() && inv; ++x) {
            if (!ord.leq(p, x)) continue;
            inv = a.squiggle(a.arrow(x, p), p) == x && a.arrow(a.squiggle(x, p), p) == x;
        }
        out.pointed_involutive = inv;
    }
    return out;
}

structure_kind_flags structure_kind(const finite_algebra& a) {
    require_pbck(a, "structure_kind");
    const order_relation ord = derive_order(a);
    structure_kind_flags out;
    out.linear = ord.linear;
    out.meet_semilattice = true;
    out.join_semilattice = true;
    for (element x = 0; x < a.size(); ++x)
        for (element y = 0; y < a.size(); ++y) {
            if (!glb(a, ord, x, y)) out.meet_semilattice = false;
            if (!lub(a, ord, x, y)) out.join_semilattice = false;
        }
    out.lattice = out.meet_semilattice && out.join_semilattice;
    return out;
}

finite_algebra direct_product_raw(const finite_algebra& a1, const finite_algebra& a2) {
    const int n1 = a1.size(), n2 = a2.size();
    if (n1 * n2 > carrier_cap)
        throw error(errc::size_limit, "product carrier exceeds cap " + std::to_string(carrier_cap));
    const int n = n1 * n2;
    std::vector<element> arrow(n * n), squiggle(n * n);
    for (element x1 = 0; x1 < n1; ++x1)
        for (element x2 = 0; x2 < n2; ++x2)
            for (element y1 = 0; y1 < n1; ++y1)
                for (element y2 = 0; y2 < n2; ++y2) {
                    const element x = x1 * n2 + x2, y = y1 * n2 + y2;
                    arrow[x * n + y] = a1.arrow(x1, y1) * n2 + a2.arrow(x2, y2);
                    squiggle[x * n + y] = a1.squiggle(x1, y1) * n2 + a2.squiggle(x2, y2);
                }
    std::vector<std::string> names;
    if (a1.named() && a2.named()) {
        names.reserve(n);
        std::set<std::string> seen;
        bool ok = true;
        for (element x1 = 0; x1 < n1 && ok; ++x1)
            for (element x2 = 0; x2 < n2 && ok; ++x2) {
                std::string nm = "(" + a1.name_of(x1) + "," + a2.name_of(x2) + ")";
                ok = seen.insert(nm).second;
                names.push_back(std::move(nm));
            }
        if (!ok) names.clear();
    }
    return finite_algebra(n, std::move(arrow), std::move(squiggle),
                          a1.top() * n2 + a2.top(), std::move(names));
}

finite_algebra direct_product(const finite_algebra& a1, const finite_algebra& a2) {
    require_pbck(a1, "direct_product (left factor)");
    require_pbck(a2, "direct_product (right factor)");
    return direct_product_raw(a1, a2);
}

} // namespace pbck
