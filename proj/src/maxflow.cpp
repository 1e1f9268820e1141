#include "injcol/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace injcol {

void MaxFlow::add_edge(int from, int to, Capacity cap)
{
    graph_[from].push_back({to, static_cast<int>(graph_[to].size()), cap});
    graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0});
}

bool MaxFlow::build_levels(int source, int sink)
{
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Arc& a : graph_[v])
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[v] + 1;
                q.push(a.to);
            }
    }
    return level_[sink] >= 0;
}

MaxFlow::Capacity MaxFlow::augment(int v, int sink, Capacity limit)
{
    if (v == sink)
        return limit;
    for (std::size_t& i = iter_[v]; i < graph_[v].size(); ++i) {
        Arc& a = graph_[v][i];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1)
            continue;
        Capacity pushed = augment(a.to, sink, std::min(limit, a.cap));
        if (pushed > 0) {
            a.cap -= pushed;
            graph_[a.to][a.rev].cap += pushed;
            return pushed;
        }
    }
    return 0;
}

MaxFlow::Capacity MaxFlow::solve(int source, int sink)
{
    Capacity total = 0;
    while (build_levels(source, sink)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (Capacity f = augment(source, sink, std::numeric_limits<Capacity>::max()))
            total += f;
    }
    return total;
}

std::vector<char> MaxFlow::source_side(int source) const
{
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arc& a : graph_[v])
            if (a.cap > 0 && !seen[a.to]) {
                seen[a.to] = 1;
                stack.push_back(a.to);
            }
    }
    return seen;
}

} // namespace injcol
