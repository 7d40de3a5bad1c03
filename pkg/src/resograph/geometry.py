"""Exact planar predicates on integer (or rational) coordinates."""

from fractions import Fraction


def orient(a, b, c):
    """Twice the signed area of triangle abc; > 0 for a left turn."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def on_segment(p, a, b):
    """True iff p lies on the closed segment ab (p collinear assumed checked)."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(a, b, c, d):
    """Closed-segment intersection test, exact for integer input."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and \
            ((o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)):
        return True
    if o1 == 0 and on_segment(c, a, b):
        return True
    if o2 == 0 and on_segment(d, a, b):
        return True
    if o3 == 0 and on_segment(a, c, d):
        return True
    if o4 == 0 and on_segment(b, c, d):
        return True
    return False


def signed_area2(points):
    """Twice the shoelace area. Negative means clockwise (y axis up)."""
    s = 0
    n = len(points)
    for i in range(n):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s


def point_in_polygon(p, polygon):
    """Return 1 if p is strictly inside, 0 on the boundary, -1 outside."""
    n = len(polygon)
    inside = False
    px, py = p
    for i in range(n):
        a = polygon[i]
        b = polygon[(i + 1) % n]
        if orient(a, b, p) == 0 and on_segment(p, a, b):
            return 0
        # half-open rule on y avoids double counting at vertices
        if (a[1] > py) != (b[1] > py):
            # x coordinate of the crossing, compared without division
            t_num = (py - a[1])
            t_den = (b[1] - a[1])
            x_cross = a[0] + Fraction(t_num) * (b[0] - a[0]) / t_den
            if px < x_cross:
                inside = not inside
    return 1 if inside else -1


def interior_point(polygon):
    """A point strictly inside a simple polygon.

    Uses the centroid of an ear, which always lies strictly inside; the
    polygon centroid can fall outside non-convex faces.
    """
    pts = list(polygon)
    if signed_area2(pts) < 0:
        pts.reverse()
    n = len(pts)
    if n < 3:
        raise ValueError("polygon needs at least three vertices")
    for i in range(n):
        a, v, b = pts[i - 1], pts[i], pts[(i + 1) % n]
        if orient(a, v, b) <= 0:
            continue
        blocked = False
        for j in range(n):
            q = pts[j]
            if q == a or q == v or q == b:
                continue
            if orient(a, v, q) >= 0 and orient(v, b, q) >= 0 and orient(b, a, q) >= 0:
                blocked = True
                break
        if not blocked:
            return (Fraction(a[0] + v[0] + b[0], 3), Fraction(a[1] + v[1] + b[1], 3))
    raise ValueError("no ear found; polygon is not simple")
