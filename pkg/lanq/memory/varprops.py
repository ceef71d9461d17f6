"""
Variable properties: the scoped maps describing the variables of running methods.

A VarProps value is a stack of method frames (separated by ∘G); each frame is a
stack of block-scope tuples (separated by ∘L). Only the frame of the running
method, the newest one, is ever consulted. Within it, lookups walk from the
newest tuple to the oldest and the first tuple defining the name wins.
"""

VAR, CH, QA, TYPE = 'var', 'ch', 'qa', 'type'
FIELDS = (VAR, CH, QA, TYPE)


class VarPropTuple:
    """
    The quadruple (f_var, f_ch, f_qa, f_type) of one block scope.

    f_var maps a name to its local reference, f_ch maps a channel variable to
    the names of its two ends, f_qa maps an alias to its proper subsystems and
    f_type maps a name to its type. The empty tuple ◊ has four empty maps.
    """
    def __init__(self, var=None, ch=None, qa=None, type=None):
        self.maps = {
            VAR: {} if var is None else dict(var),
            CH: {} if ch is None else dict(ch),
            QA: {} if qa is None else dict(qa),
            TYPE: {} if type is None else dict(type),
        }

    def get(self, field, name):
        return self.maps[field].get(name)

    def defines(self, field, name):
        return name in self.maps[field]

    def with_binding(self, field, name, value):
        new = VarPropTuple(**self.maps)
        new.maps[field][name] = value
        return new

    @property
    def is_empty(self):
        return not any(self.maps.values())

    def __eq__(self, other):
        return isinstance(other, VarPropTuple) and self.maps == other.maps

    def __repr__(self):
        if self.is_empty:
            return '◊'
        parts = []
        for field in FIELDS:
            entries = ', '.join(
                f'{name}↦{value!r}' for name, value in sorted(self.maps[field].items())
            )
            parts.append('{' + entries + '}')
        return '(' + ', '.join(parts) + ')'


EMPTY_TUPLE = VarPropTuple()


class VarProps:
    """
    A stack of frames, each a stack of VarPropTuples. Treated as a value.

    ``VarProps()`` is ■, the properties of a process running no method. A frame
    with no tuples is □.
    """
    def __init__(self, frames=()):
        self.frames = tuple(tuple(frame) for frame in frames)

    @property
    def is_empty(self):
        """True for ■."""
        return not self.frames

    @property
    def current(self):
        """The tuples of the running method, oldest first."""
        return self.frames[-1] if self.frames else ()

    def _lookup(self, field, name):
        for props in reversed(self.current):
            if props.defines(field, name):
                return props.get(field, name)
        return None

    def var_ref(self, name):
        """The local reference bound to name, or None when undefined."""
        return self._lookup(VAR, name)

    def chan_ends(self, name):
        return self._lookup(CH, name)

    def alias_subsyst(self, name):
        return self._lookup(QA, name)

    def type_of(self, name):
        return self._lookup(TYPE, name)

    def _with_current(self, tuples):
        return VarProps(self.frames[:-1] + (tuple(tuples),))

    def replace(self, name, value, field=VAR):
        """``vp[name ↦ value]_field``: rewrite the newest tuple that already defines name."""
        tuples = list(self.current)
        for index in reversed(range(len(tuples))):
            if tuples[index].defines(field, name):
                tuples[index] = tuples[index].with_binding(field, name, value)
                return self._with_current(tuples)
        return self

    def update(self, name, value, field=VAR):
        """``vp[name ↦ value]_{+,field}``: bind name in the newest tuple."""
        if not self.current:
            return self
        tuples = list(self.current)
        tuples[-1] = tuples[-1].with_binding(field, name, value)
        return self._with_current(tuples)

    def push_scope(self, props=EMPTY_TUPLE):
        assert self.frames, "A block scope can only be opened inside a method frame."
        return self._with_current(self.current + (props,))

    def pop_scope(self):
        assert self.current, "There is no block scope to close."
        return self._with_current(self.current[:-1])

    def push_frame(self, props):
        return VarProps(self.frames + ((props,),))

    def pop_frame(self):
        assert self.frames, "There is no method frame to leave."
        return VarProps(self.frames[:-1])

    def local_aliased_vars(self):
        """Names of the aliases declared in the running method."""
        names = set()
        for props in self.current:
            names.update(props.maps[QA])
        return names

    def context(self):
        """
        The variable typing context of the running method.

        Types from newer tuples shadow types from older ones; ■ gives the empty context.
        """
        gamma = {}
        for props in self.current:
            gamma.update(props.maps[TYPE])
        return gamma

    def __eq__(self, other):
        return isinstance(other, VarProps) and self.frames == other.frames

    def __repr__(self):
        if not self.frames:
            return '■'
        rendered = []
        for frame in self.frames:
            rendered.append('[' + ' ∘L '.join(['□'] + [repr(props) for props in frame]) + ']')
        return '[■ ∘G ' + ' ∘G '.join(rendered) + ']'
