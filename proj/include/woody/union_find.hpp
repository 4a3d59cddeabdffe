#ifndef WOODY_UNION_FIND_HPP
#define WOODY_UNION_FIND_HPP

#include <numeric>
#include <utility>
#include <vector>

namespace woody
{
    class UnionFind
    {
        public:
            explicit UnionFind(int n) :
                _parent(n),
                _size(n, 1)
            {
                std::iota(_parent.begin(), _parent.end(), 0);
            }

            auto find(int x) -> int
            {
                while (_parent[x] != x) {
                    _parent[x] = _parent[_parent[x]];
                    x = _parent[x];
                }
                return x;
            }

            /// False if x and y were already in one set.
            auto unite(int x, int y) -> bool
            {
                x = find(x);
                y = find(y);
                if (x == y)
                    return false;
                if (_size[x] < _size[y])
                    std::swap(x, y);
                _parent[y] = x;
                _size[x] += _size[y];
                return true;
            }

            auto connected(int x, int y) -> bool { return find(x) == find(y); }

        private:
            std::vector<int> _parent;
            std::vector<int> _size;
    };

    /// Union by size without path compression, so every union can be undone
    /// in LIFO order.
    class RollbackUnionFind
    {
        public:
            explicit RollbackUnionFind(int n) :
                _parent(n),
                _size(n, 1)
            {
                std::iota(_parent.begin(), _parent.end(), 0);
            }

            auto find(int x) const -> int
            {
                while (_parent[x] != x)
                    x = _parent[x];
                return x;
            }

            auto unite(int x, int y) -> bool
            {
                x = find(x);
                y = find(y);
                if (x == y)
                    return false;
                if (_size[x] < _size[y])
                    std::swap(x, y);
                _parent[y] = x;
                _size[x] += _size[y];
                _journal.push_back(y);
                return true;
            }

            auto checkpoint() const -> std::size_t { return _journal.size(); }

            void rollback(std::size_t to)
            {
                while (_journal.size() > to) {
                    int y = _journal.back();
                    _journal.pop_back();
                    int x = _parent[y];
                    _size[x] -= _size[y];
                    _parent[y] = y;
                }
            }

        private:
            std::vector<int> _parent;
            std::vector<int> _size;
            std::vector<int> _journal;
    };
}

#endif
